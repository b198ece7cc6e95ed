#ifndef SPINCIRC_ORACLE_HPP
#define SPINCIRC_ORACLE_HPP

#include "spincirc/scattering.hpp"

namespace spincirc {

/// Independent derivation path: solves the real-space coupled amplitude
/// equations for each input port as an 8x8 linear system (4 mode amplitudes
/// plus 4 outgoing waveguide amplitudes), with the delta-coupled field value
/// regularized as the midpoint of its left and right limits.  Shares no code
/// with smatrix; used to validate the resolvent engine.
SMatrix oracle_smatrix(const ReducedParams& rp, double delta);

}  // namespace spincirc

#endif
