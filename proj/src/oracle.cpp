#include "spincirc/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "spincirc/errors.hpp"

namespace spincirc {

using std::complex;
using namespace std::complex_literals;

// Waveguide channels, indexed by the mode each one feeds:
//   0: a right-mover   in port 1, out port 2, mode f_cw,  coupling g_a
//   1: a left-mover    in port 2, out port 1, mode f_ccw, coupling g_a
//   2: b left-mover    in port 3, out port 4, mode d_cw,  coupling g_b
//   3: b right-mover   in port 4, out port 3, mode d_ccw, coupling g_b
//
// Steady state at photon energy delta above the cavity frequency:
//   mode equations   delta * m = H m + g * field(0)
//   jump conditions  t - in = -i (g / v_g) m
// with field(0) = (in + t) / 2.  Written in reduced rates with v_g = 1, so
// g = sqrt(2 gamma); every g appears only in v_g-free combinations.
SMatrix oracle_smatrix(const ReducedParams& rp, double delta) {
    rp.validate();
    if (!std::isfinite(delta)) throw invalid_parameter("delta must be finite");

    const double g[4] = {std::sqrt(2.0 * rp.gamma_a), std::sqrt(2.0 * rp.gamma_a),
                         std::sqrt(2.0 * rp.gamma_b), std::sqrt(2.0 * rp.gamma_b)};

    // Bare mode matrix (no decay; loss emerges from the field elimination).
    Eigen::Matrix4d h;
    h << -rp.delta_f1, rp.chi_1, 0.0, rp.j,
         rp.chi_1, rp.delta_f1, rp.j, 0.0,
         0.0, rp.j, -rp.delta_f2, rp.chi_2,
         rp.j, 0.0, rp.chi_2, rp.delta_f2;

    // channel -> output port (0-based)
    const int out_port[4] = {1, 0, 3, 2};

    SMatrix s;
    s.delta = delta;
    s.entries = Eigen::Matrix4cd::Zero();

    // Unknowns: x(0..3) = mode amplitudes, x(4..7) = outgoing amplitudes.
    for (int in = 0; in < 4; ++in) {
        Eigen::Matrix<complex<double>, 8, 8> a =
            Eigen::Matrix<complex<double>, 8, 8>::Zero();
        Eigen::Matrix<complex<double>, 8, 1> b =
            Eigen::Matrix<complex<double>, 8, 1>::Zero();

        for (int m = 0; m < 4; ++m) {
            a(m, m) += delta;
            for (int k = 0; k < 4; ++k) a(m, k) -= h(m, k);
            a(m, 4 + m) -= 0.5 * g[m];
            if (m == in) b(m) = 0.5 * g[m];
        }
        for (int ch = 0; ch < 4; ++ch) {
            a(4 + ch, 4 + ch) = 1.0;
            a(4 + ch, ch) = 1i * g[ch];
            if (ch == in) b(4 + ch) = 1.0;
        }

        Eigen::PartialPivLU<Eigen::Matrix<complex<double>, 8, 8>> lu(a);
        if (lu.rcond() < 1e-12) throw singular_resolvent(delta);
        const auto x = lu.solve(b);
        for (int ch = 0; ch < 4; ++ch) s.entries(out_port[ch], in) = x(4 + ch);
    }
    return s;
}

}  // namespace spincirc
