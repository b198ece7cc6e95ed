#include "spincirc/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace spincirc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw invalid_parameter(what);
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

double PhysicalParams::omega_c() const {
    return 2.0 * std::numbers::pi * speed_light / wavelength;
}

void PhysicalParams::validate() const {
    require(finite(radius) && radius > 0.0, "radius must be > 0");
    require(finite(wavelength) && wavelength > 0.0, "wavelength must be > 0");
    require(finite(quality) && quality > 0.0, "quality must be > 0");
    require(finite(index) && index > 1.0, "index must be > 1");
    require(finite(speed_light) && speed_light > 0.0, "speed_light must be > 0");
    require(finite(group_velocity) && group_velocity > 0.0, "group_velocity must be > 0");
    require(finite(dn_dlambda), "dn_dlambda must be finite");
    require(finite(coupling_a) && finite(coupling_b), "couplings must be finite");
    require(finite(inter_coupling), "inter_coupling must be finite");
}

void SpinConfig::validate() const {
    require(finite(omega_1) && finite(omega_2), "omega must be finite");
    require(finite(chi_1) && chi_1 >= 0.0, "chi_1 must be finite and >= 0");
    require(finite(chi_2) && chi_2 >= 0.0, "chi_2 must be finite and >= 0");
}

void ReducedParams::validate() const {
    require(finite(gamma_a) && gamma_a > 0.0, "gamma_a must be > 0");
    require(finite(gamma_b) && gamma_b > 0.0, "gamma_b must be > 0");
    require(finite(j), "j must be finite");
    require(finite(delta_f1) && finite(delta_f2), "delta_f must be finite");
    require(finite(chi_1) && chi_1 >= 0.0, "chi_1 must be finite and >= 0");
    require(finite(chi_2) && chi_2 >= 0.0, "chi_2 must be finite and >= 0");
}

double g_factor(const PhysicalParams& p) {
    p.validate();
    const double wc = p.omega_c();
    const double g = p.index * p.radius * wc / p.speed_light *
                     (1.0 - 1.0 / (p.index * p.index) -
                      p.wavelength / p.index * p.dn_dlambda);
    if (!std::isfinite(g)) throw invalid_parameter("g_factor is not finite");
    return g;
}

double sagnac_shift(const PhysicalParams& p, double omega) {
    if (!std::isfinite(omega)) throw invalid_parameter("omega must be finite");
    return omega * g_factor(p);
}

ReducedParams to_reduced(const PhysicalParams& p, const SpinConfig& s) {
    p.validate();
    s.validate();
    ReducedParams rp;
    rp.gamma_a = p.coupling_a * p.coupling_a / (2.0 * p.group_velocity);
    rp.gamma_b = p.coupling_b * p.coupling_b / (2.0 * p.group_velocity);
    rp.j = p.inter_coupling;
    rp.delta_f1 = sagnac_shift(p, s.omega_1);
    rp.delta_f2 = sagnac_shift(p, s.omega_2);
    rp.chi_1 = s.chi_1;
    rp.chi_2 = s.chi_2;
    if (rp.gamma_a <= 0.0 || rp.gamma_b <= 0.0)
        throw invalid_parameter("zero waveguide coupling: gamma must be > 0");
    rp.validate();
    return rp;
}

namespace {

// The figure parameter set: R = 30 um, n = 1.4, lambda = 1.55 um, Q = 1e9,
// c = v_g = 3e8 m/s, J = 2.4e6 rad/s.  The waveguide coupling is calibrated
// so that gamma = g^2/(2 v_g) = 0.41e6 rad/s, which puts the complete-routing
// angular velocity sqrt(J^2 + gamma^2)/G at the quoted 29.2e3 rad/s.
PhysicalParams base_physical() {
    PhysicalParams p;
    p.radius = 30e-6;
    p.index = 1.4;
    p.dn_dlambda = 0.0;
    p.wavelength = 1.55e-6;
    p.quality = 1e9;
    p.speed_light = 3e8;
    p.group_velocity = 3e8;
    p.coupling_a = std::sqrt(2.0 * 3e8 * 0.41e6);
    p.coupling_b = p.coupling_a;
    p.inter_coupling = 2.4e6;
    return p;
}

Preset make(const std::string& name, double omega1, double omega2, double chi1,
            double chi2, bool single, const std::string& label) {
    Preset pr;
    pr.name = name;
    pr.physical = base_physical();
    pr.spin = SpinConfig{omega1, omega2, chi1, chi2};
    pr.sweep_min = -8e6;
    pr.sweep_max = 8e6;
    pr.single_resonator = single;
    pr.label = label;
    return pr;
}

const std::vector<Preset>& catalog() {
    static const std::vector<Preset> presets = {
        make("fig2-single", 29e3, 0.0, 0.0, 0.0, true,
             "single spinning resonator, Omega = 29e3 rad/s (Fig. 2 a)"),
        make("fig2-b", 29e3, 0.0, 0.0, 0.0, false,
             "resonator f spinning CW, Omega1 = 29e3 rad/s, Omega2 = 0 (Fig. 2 b)"),
        make("fig2-c", -29e3, 0.0, 0.0, 0.0, false,
             "resonator f spinning CCW, Omega1 = -29e3 rad/s, Omega2 = 0 (Fig. 2 c)"),
        make("fig3-corotate", 29e3, 29e3, 0.0, 0.0, false,
             "co-rotating, Omega1 = Omega2 = 29e3 rad/s (Fig. 3 a-b)"),
        make("fig3-counter", 29.2e3, -29.2e3, 0.0, 0.0, false,
             "counter-rotating, Omega1 = -Omega2 = 29.2e3 rad/s (Fig. 3 c-d)"),
        make("fig4-a", 0.0, 0.0, 1.2e6, 0.0, false,
             "static, backscattering in f only, chi1 = 1.2e6 rad/s (Fig. 4 a)"),
        make("fig4-b", 0.0, 0.0, 1.2e6, 1.2e6, false,
             "static, backscattering in both, chi1 = chi2 = 1.2e6 rad/s (Fig. 4 b)"),
        make("fig5", 24e3, 24e3, 1.2e6, 1.2e6, false,
             "co-rotating with backscattering, Omega1 = Omega2 = 24e3 rad/s, "
             "chi1 = chi2 = 1.2e6 rad/s (Fig. 5)"),
    };
    return presets;
}

}  // namespace

const Preset& load_preset(const std::string& name) {
    for (const auto& p : catalog())
        if (p.name == name) return p;
    std::ostringstream msg;
    msg << "unknown preset '" << name << "'; valid names:";
    for (const auto& p : catalog()) msg << ' ' << p.name;
    throw invalid_parameter(msg.str());
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& p : catalog()) names.push_back(p.name);
    return names;
}

}  // namespace spincirc
