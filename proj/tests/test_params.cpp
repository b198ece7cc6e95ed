#include <doctest.h>

#include <cmath>

#include "spincirc/params.hpp"

using namespace spincirc;

namespace {

PhysicalParams calibrated() { return load_preset("fig2-b").physical; }

}  // namespace

TEST_CASE("sagnac gain factor for the calibrated geometry") {
    const double g = g_factor(calibrated());
    CHECK(g == doctest::Approx(83.389740482383).epsilon(1e-9));
}

TEST_CASE("sagnac shifts at the quoted angular velocities") {
    const PhysicalParams p = calibrated();
    CHECK(sagnac_shift(p, 29e3) == doctest::Approx(2418302.473989).epsilon(1e-9));
    CHECK(sagnac_shift(p, 29.2e3) == doctest::Approx(2434980.422086).epsilon(1e-9));
    CHECK(sagnac_shift(p, 24e3) == doctest::Approx(2001353.771577).epsilon(1e-9));
    CHECK(sagnac_shift(p, -29e3) == doctest::Approx(-2418302.473989).epsilon(1e-9));
    CHECK(sagnac_shift(p, 0.0) == 0.0);
}

TEST_CASE("dispersion term reduces the gain") {
    PhysicalParams p = calibrated();
    const double g0 = g_factor(p);
    p.dn_dlambda = 1e4;  // positive dn/dlambda subtracts from the bracket
    CHECK(g_factor(p) < g0);
}

TEST_CASE("reduction produces the calibrated decay rates") {
    const Preset& pr = load_preset("fig2-b");
    const ReducedParams rp = pr.reduced();
    CHECK(rp.gamma_a == doctest::Approx(0.41e6).epsilon(1e-12));
    CHECK(rp.gamma_b == doctest::Approx(0.41e6).epsilon(1e-12));
    CHECK(rp.j == 2.4e6);
    CHECK(rp.delta_f1 == doctest::Approx(2418302.473989).epsilon(1e-9));
    CHECK(rp.delta_f2 == 0.0);
    CHECK(rp.chi_1 == 0.0);
    CHECK(rp.chi_2 == 0.0);
}

TEST_CASE("preset catalog shape") {
    const auto names = preset_names();
    REQUIRE(names.size() == 8);
    CHECK(load_preset("fig2-single").single_resonator);
    CHECK_FALSE(load_preset("fig2-b").single_resonator);
    CHECK(load_preset("fig2-c").reduced().delta_f1 ==
          doctest::Approx(-load_preset("fig2-b").reduced().delta_f1));
    const ReducedParams counter = load_preset("fig3-counter").reduced();
    CHECK(counter.delta_f1 == doctest::Approx(-counter.delta_f2));
    const ReducedParams f5 = load_preset("fig5").reduced();
    CHECK(f5.chi_1 == 1.2e6);
    CHECK(f5.chi_2 == 1.2e6);
    CHECK(f5.delta_f1 == doctest::Approx(2001353.771577).epsilon(1e-9));
    for (const auto& n : names) {
        const Preset& p = load_preset(n);
        CHECK(p.sweep_min < p.sweep_max);
    }
}

TEST_CASE("unknown preset names are rejected with the valid list") {
    CHECK_THROWS_AS(load_preset("fig9"), invalid_parameter);
    try {
        load_preset("fig9");
    } catch (const invalid_parameter& e) {
        const std::string msg = e.what();
        CHECK(msg.find("fig2-b") != std::string::npos);
    }
}

TEST_CASE("validation rejects nonsense") {
    PhysicalParams p = calibrated();
    p.index = 0.9;
    CHECK_THROWS_AS(p.validate(), invalid_parameter);
    ReducedParams rp;
    rp.gamma_a = -1.0;
    rp.gamma_b = 1.0;
    CHECK_THROWS_AS(rp.validate(), invalid_parameter);
    SpinConfig s;
    s.chi_1 = -1.0;
    CHECK_THROWS_AS(s.validate(), invalid_parameter);
}
