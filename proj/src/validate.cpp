#include "spincirc/validate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spincirc/oracle.hpp"
#include "spincirc/scattering.hpp"

namespace spincirc {

namespace {

struct Sample {
    ReducedParams rp;
    double delta;
};

Sample draw(std::mt19937_64& rng, bool with_chi) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto log_uniform = [&](double lo, double hi) {
        return std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * u01(rng));
    };
    Sample s;
    s.rp.gamma_a = log_uniform(1e3, 1e8);
    s.rp.gamma_b = log_uniform(1e3, 1e8);
    s.rp.j = log_uniform(1e3, 1e8) * (u01(rng) < 0.5 ? -1.0 : 1.0);
    s.rp.delta_f1 = (2.0 * u01(rng) - 1.0) * 1e7;
    s.rp.delta_f2 = (2.0 * u01(rng) - 1.0) * 1e7;
    if (with_chi) {
        std::uniform_real_distribution<double> chi(0.0, 1e7);
        s.rp.chi_1 = chi(rng);
        s.rp.chi_2 = chi(rng);
    }
    s.delta = (2.0 * u01(rng) - 1.0) * 3e7;
    return s;
}

double max_abs(const Eigen::Matrix4cd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

std::vector<SuiteResult> run_validation(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);

    SuiteResult unitarity{"unitarity |S*S - I|", 0.0, 1e-10, samples, false};
    SuiteResult colsum{"column probability sums", 0.0, 1e-12, samples, false};
    SuiteResult closed_eq{"smatrix vs closed form (chi=0)", 0.0, 1e-12, samples, false};
    SuiteResult oracle_eq0{"oracle vs closed form (chi=0)", 0.0, 1e-10, samples, false};
    SuiteResult oracle_eq{"oracle vs smatrix (chi!=0)", 0.0, 1e-10, samples, false};
    SuiteResult oracle_unit{"oracle unitarity", 0.0, 1e-10, samples, false};
    SuiteResult forbidden{"forbidden amplitudes (chi=0)", 0.0, 1e-12, samples, false};
    SuiteResult mirror{"mirror symmetry", 0.0, 1e-10, samples, false};
    SuiteResult reversal{"transpose reversal", 0.0, 1e-10, samples, false};

    const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();

    for (int k = 0; k < samples; ++k) {
        // chi = 0 leg: three-way equivalence and exact zeros
        {
            const Sample s = draw(rng, false);
            const SMatrix a = smatrix(s.rp, s.delta);
            const SMatrix c = closed_form_smatrix(s.rp, s.delta);
            const SMatrix o = oracle_smatrix(s.rp, s.delta);
            closed_eq.max_error =
                std::max(closed_eq.max_error, max_abs(a.entries - c.entries));
            oracle_eq0.max_error =
                std::max(oracle_eq0.max_error, max_abs(o.entries - c.entries));
            const auto& e = a.entries;
            const double worst_forbidden =
                std::max({std::abs(e(0, 0)), std::abs(e(3, 0)), std::abs(e(1, 1)),
                          std::abs(e(2, 2)), std::abs(e(2, 1)), std::abs(e(3, 3)),
                          std::abs(e(1, 2)), std::abs(e(0, 3))});
            forbidden.max_error = std::max(forbidden.max_error, worst_forbidden);
        }
        // chi != 0 leg: oracle equivalence, unitarity, symmetries
        {
            const Sample s = draw(rng, true);
            const SMatrix a = smatrix(s.rp, s.delta);
            const SMatrix o = oracle_smatrix(s.rp, s.delta);
            oracle_eq.max_error =
                std::max(oracle_eq.max_error, max_abs(a.entries - o.entries));
            unitarity.max_error = std::max(
                unitarity.max_error,
                (a.entries.adjoint() * a.entries - id).cwiseAbs().maxCoeff());
            oracle_unit.max_error = std::max(
                oracle_unit.max_error,
                (o.entries.adjoint() * o.entries - id).cwiseAbs().maxCoeff());
            const Eigen::Matrix4d t = transmission(a);
            for (int i = 0; i < 4; ++i)
                colsum.max_error =
                    std::max(colsum.max_error, std::abs(t.col(i).sum() - 1.0));

            ReducedParams flipped = s.rp;
            flipped.delta_f1 = -s.rp.delta_f1;
            flipped.delta_f2 = -s.rp.delta_f2;
            const Eigen::Matrix4d tm = transmission(smatrix(flipped, -s.delta));
            mirror.max_error =
                std::max(mirror.max_error, (t - tm).cwiseAbs().maxCoeff());
            const Eigen::Matrix4d tr = transmission(smatrix(flipped, s.delta));
            reversal.max_error = std::max(
                reversal.max_error,
                (t - tr.transpose()).cwiseAbs().maxCoeff());
        }
    }

    std::vector<SuiteResult> all = {unitarity,  colsum,     closed_eq,
                                    oracle_eq0, oracle_eq,  oracle_unit,
                                    forbidden,  mirror,     reversal};
    for (auto& r : all) r.passed = r.max_error < r.tolerance;
    return all;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.passed; });
}

}  // namespace spincirc
