#include "spincirc/scattering.hpp"

#include <cmath>

#include "spincirc/errors.hpp"

namespace spincirc {

using std::complex;
using namespace std::complex_literals;

namespace {

constexpr double kRcondFloor = 1e-12;  // condition number cap 1e12

void check_delta(double delta) {
    if (!std::isfinite(delta)) throw invalid_parameter("delta must be finite");
}

// Direct a-to-a and b-to-b pass-through, ports (1<->2), (3<->4).
Eigen::Matrix4cd direct_path() {
    Eigen::Matrix4cd c = Eigen::Matrix4cd::Zero();
    c(1, 0) = c(0, 1) = 1.0;
    c(3, 2) = c(2, 3) = 1.0;
    return c;
}

}  // namespace

Eigen::Matrix4cd effective_hamiltonian(const ReducedParams& rp) {
    rp.validate();
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = -rp.delta_f1 - 1i * rp.gamma_a;
    m(1, 1) = rp.delta_f1 - 1i * rp.gamma_a;
    m(2, 2) = -rp.delta_f2 - 1i * rp.gamma_b;
    m(3, 3) = rp.delta_f2 - 1i * rp.gamma_b;
    m(0, 1) = m(1, 0) = rp.chi_1;
    m(2, 3) = m(3, 2) = rp.chi_2;
    m(0, 3) = m(3, 0) = rp.j;
    m(1, 2) = m(2, 1) = rp.j;
    return m;
}

SMatrix smatrix(const ReducedParams& rp, double delta) {
    check_delta(delta);
    const Eigen::Matrix4cd m = effective_hamiltonian(rp);

    const double wa = std::sqrt(2.0 * rp.gamma_a);
    const double wb = std::sqrt(2.0 * rp.gamma_b);
    Eigen::Matrix4cd k_in = Eigen::Matrix4cd::Zero();   // port -> mode
    k_in(0, 0) = wa;  // port 1 drives FCw
    k_in(1, 1) = wa;  // port 2 drives FCcw
    k_in(2, 2) = wb;  // port 3 drives DCw
    k_in(3, 3) = wb;  // port 4 drives DCcw
    Eigen::Matrix4cd k_out = Eigen::Matrix4cd::Zero();  // mode -> port
    k_out(0, 1) = wa;  // FCcw emits into port 1
    k_out(1, 0) = wa;  // FCw emits into port 2
    k_out(2, 3) = wb;  // DCcw emits into port 3
    k_out(3, 2) = wb;  // DCw emits into port 4

    Eigen::Matrix4cd a = delta * Eigen::Matrix4cd::Identity() - m;
    Eigen::PartialPivLU<Eigen::Matrix4cd> lu(a);
    if (lu.rcond() < kRcondFloor) throw singular_resolvent(delta);

    SMatrix s;
    s.delta = delta;
    s.entries = direct_path() - 1i * (k_out * lu.solve(k_in.transpose()));
    return s;
}

SMatrix closed_form_smatrix(const ReducedParams& rp, double delta) {
    rp.validate();
    check_delta(delta);
    if (rp.chi_1 != 0.0 || rp.chi_2 != 0.0)
        throw invalid_parameter("closed_form_smatrix requires chi_1 = chi_2 = 0");

    const double ga = rp.gamma_a, gb = rp.gamma_b, j = rp.j;
    const double cross = 2.0 * std::sqrt(ga * gb) * j;

    // Right-moving sector: FCw (at -dF1) hybridized with DCcw (at +dF2).
    const double p = delta + rp.delta_f1;
    const double q = delta - rp.delta_f2;
    const complex<double> dr = (p + 1i * ga) * (q + 1i * gb) - j * j;
    const complex<double> t12 = ((p - 1i * ga) * (q + 1i * gb) - j * j) / dr;
    const complex<double> t43 = ((p + 1i * ga) * (q - 1i * gb) - j * j) / dr;
    const complex<double> t13 = -1i * cross / dr;

    // Left-moving sector: FCcw (at +dF1) hybridized with DCw (at -dF2).
    const double pp = delta - rp.delta_f1;
    const double qq = delta + rp.delta_f2;
    const complex<double> dl = (pp + 1i * ga) * (qq + 1i * gb) - j * j;
    const complex<double> t21 = ((pp - 1i * ga) * (qq + 1i * gb) - j * j) / dl;
    const complex<double> t34 = ((pp + 1i * ga) * (qq - 1i * gb) - j * j) / dl;
    const complex<double> t24 = -1i * cross / dl;

    SMatrix s;
    s.delta = delta;
    s.entries = Eigen::Matrix4cd::Zero();
    auto& e = s.entries;       // e(j, i) = t_{i+1 -> j+1}
    e(1, 0) = t12;
    e(2, 0) = t13;
    e(0, 1) = t21;
    e(3, 1) = t24;
    e(3, 2) = t34;
    e(0, 2) = t24;  // t_{3->1} = t_{2->4}: same resolvent element
    e(2, 3) = t43;
    e(1, 3) = t13;  // t_{4->2} = t_{1->3}
    return s;
}

SMatrix single_resonator_smatrix(double gamma_a, double gamma_b, double delta_f,
                                 double chi, double delta) {
    if (!(std::isfinite(gamma_a) && gamma_a > 0.0) ||
        !(std::isfinite(gamma_b) && gamma_b > 0.0))
        throw invalid_parameter("gamma must be > 0");
    if (!std::isfinite(delta_f) || !std::isfinite(chi) || chi < 0.0)
        throw invalid_parameter("delta_f finite and chi >= 0 required");
    check_delta(delta);

    const double loss = gamma_a + gamma_b;
    Eigen::Matrix2cd m;
    m << -delta_f - 1i * loss, chi,
         chi, delta_f - 1i * loss;

    const double wa = std::sqrt(2.0 * gamma_a);
    const double wb = std::sqrt(2.0 * gamma_b);
    // CW couples the a right-mover and b left-mover; CCW the a left-mover and
    // b right-mover.  Same port geometry as the two-resonator device.
    Eigen::Matrix<complex<double>, 4, 2> k_in = Eigen::Matrix<complex<double>, 4, 2>::Zero();
    k_in(0, 0) = wa;  // port 1 -> CW
    k_in(1, 1) = wa;  // port 2 -> CCW
    k_in(2, 0) = wb;  // port 3 -> CW
    k_in(3, 1) = wb;  // port 4 -> CCW
    Eigen::Matrix<complex<double>, 4, 2> k_out = Eigen::Matrix<complex<double>, 4, 2>::Zero();
    k_out(0, 1) = wa;  // CCW -> port 1
    k_out(1, 0) = wa;  // CW  -> port 2
    k_out(2, 1) = wb;  // CCW -> port 3
    k_out(3, 0) = wb;  // CW  -> port 4

    Eigen::Matrix2cd a = delta * Eigen::Matrix2cd::Identity() - m;
    Eigen::PartialPivLU<Eigen::Matrix2cd> lu(a);
    if (lu.rcond() < kRcondFloor) throw singular_resolvent(delta);

    SMatrix s;
    s.delta = delta;
    s.entries = direct_path() - 1i * (k_out * lu.solve(k_in.transpose()));
    return s;
}

Eigen::Matrix4d transmission(const SMatrix& s) {
    return s.entries.cwiseAbs2();
}

}  // namespace spincirc
