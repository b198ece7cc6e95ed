#ifndef SPINCIRC_IO_HPP
#define SPINCIRC_IO_HPP

#include <iosfwd>
#include <string>

#include "spincirc/analysis.hpp"
#include "spincirc/params.hpp"

namespace spincirc {

/// A fully validated parameter bundle from a JSON configuration.
struct ConfigBundle {
    PhysicalParams physical;
    SpinConfig spin;
    ReducedParams reduced;       // conversion result with any overrides applied
    bool has_override = false;   // a "reduced" object was present
};

/// Parses the JSON configuration schema:
///   { "physical": { radius_m, index, dn_dlambda?, wavelength_m, quality,
///                   speed_light_mps?, group_velocity_mps, coupling_a,
///                   coupling_b, j_rad_s },
///     "spin": { omega1_rad_s, omega2_rad_s, chi1_rad_s, chi2_rad_s },
///     "reduced"?: { gamma_a?, gamma_b?, j?, delta_f1?, delta_f2?,
///                   chi_1?, chi_2? } }
/// Unknown keys are a hard error; a physics parameter typo must not pass
/// silently.  The optional "reduced" object overrides the physical-to-reduced
/// conversion field by field.
ConfigBundle parse_config(const std::string& text);

/// CSV emission: header `delta,T11,T12,...,T44` with Tij = T_{i->j}, one row
/// per detuning, 17 significant digits, locale-independent.
void write_csv(const SweepResult& result, std::ostream& sink);

/// Shortest round-trippable decimal form of a double (%.17g).
std::string format_double(double x);

}  // namespace spincirc

#endif
