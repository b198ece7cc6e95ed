#ifndef SPINCIRC_SCATTERING_HPP
#define SPINCIRC_SCATTERING_HPP

#include <Eigen/Dense>
#include <complex>

#include "spincirc/params.hpp"

namespace spincirc {

// Travelling-mode basis, fixed ordering. Input ports map onto the modes as
// 1 -> FCw, 2 -> FCcw, 3 -> DCw, 4 -> DCcw; output ports as 1 <- FCcw,
// 2 <- FCw, 3 <- DCcw, 4 <- DCw (waveguide a feeds f, waveguide b feeds d,
// ports 1/4 sit at the left waveguide ends, 2/3 at the right ends).
enum class Mode : int { FCw = 0, FCcw = 1, DCw = 2, DCcw = 3 };

/// Port-to-port amplitude matrix at one detuning.
/// entries(j, i) is t_{i+1 -> j+1}, the amplitude for a photon injected at
/// port i+1 to exit at port j+1.  Unitary: the model has no intrinsic loss.
struct SMatrix {
    Eigen::Matrix4cd entries;
    double delta = 0.0;  // rad/s
};

/// Non-Hermitian mode matrix in the detuning frame, basis (FCw, FCcw, DCw,
/// DCcw).  Complex symmetric: diagonal (-dF1 - i*Ga, +dF1 - i*Ga,
/// -dF2 - i*Gb, +dF2 - i*Gb), chi_1 between the f modes, chi_2 between the
/// d modes, j between FCw<->DCcw and FCcw<->DCw.
Eigen::Matrix4cd effective_hamiltonian(const ReducedParams& rp);

/// General scattering matrix via the resolvent,
/// S = C - i K_out (delta*I - M)^-1 K_in^T.  Valid for any backscattering.
/// Throws singular_resolvent when the linear solve is ill-conditioned.
SMatrix smatrix(const ReducedParams& rp, double delta);

/// Closed-form amplitudes; requires chi_1 = chi_2 = 0.  Forbidden entries are
/// written as exact zeros.  Serves as an algebraic cross-check of smatrix.
SMatrix closed_form_smatrix(const ReducedParams& rp, double delta);

/// One resonator coupled to both waveguides: CW mode at -delta_f, CCW at
/// +delta_f, each decaying at gamma_a + gamma_b, chi between them.
SMatrix single_resonator_smatrix(double gamma_a, double gamma_b, double delta_f,
                                 double chi, double delta);

/// Entrywise squared magnitudes, T_{i->j} = |t_{i->j}|^2.
Eigen::Matrix4d transmission(const SMatrix& s);

}  // namespace spincirc

#endif
