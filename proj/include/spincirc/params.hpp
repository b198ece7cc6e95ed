#ifndef SPINCIRC_PARAMS_HPP
#define SPINCIRC_PARAMS_HPP

#include <string>
#include <vector>

#include "spincirc/errors.hpp"

namespace spincirc {

// All frequencies, rates, shifts and detunings are angular frequencies in
// rad/s. The figure labels "kHz"/"MHz" are read as 1e3/1e6 rad/s with no 2*pi
// factor; only dimensionless ratios enter the transmissions, so the
// convention is self-consistent.

/// Laboratory-frame device constants.
struct PhysicalParams {
    double radius = 0.0;          // resonator radius R (m)
    double index = 0.0;           // refractive index n (> 1)
    double dn_dlambda = 0.0;      // dispersion dn/dlambda (1/m), usually 0
    double wavelength = 0.0;      // vacuum wavelength (m)
    double quality = 0.0;         // Q factor
    double speed_light = 0.0;     // c (m/s)
    double group_velocity = 0.0;  // waveguide group velocity v_g (m/s)
    double coupling_a = 0.0;      // g_a, units sqrt(velocity * angular frequency)
    double coupling_b = 0.0;      // g_b
    double inter_coupling = 0.0;  // J (rad/s)

    /// Cavity frequency 2*pi*c/lambda; derived, never stored.
    double omega_c() const;

    void validate() const;
};

/// Mechanical angular velocities (positive = CW) and backscattering strengths.
struct SpinConfig {
    double omega_1 = 0.0;  // rad/s, resonator f
    double omega_2 = 0.0;  // rad/s, resonator d
    double chi_1 = 0.0;    // rad/s, real, >= 0
    double chi_2 = 0.0;

    void validate() const;
};

/// The six-rate model every solver consumes.
struct ReducedParams {
    double gamma_a = 0.0;   // external decay per f mode, g_a^2/(2 v_g)
    double gamma_b = 0.0;   // external decay per d mode
    double j = 0.0;         // inter-resonator coupling
    double delta_f1 = 0.0;  // Sagnac shift of resonator f, signed
    double delta_f2 = 0.0;  // Sagnac shift of resonator d, signed
    double chi_1 = 0.0;     // backscattering inside f
    double chi_2 = 0.0;     // backscattering inside d

    void validate() const;
};

/// Dimensionless Sagnac gain G, so that Delta_F = Omega * G.
double g_factor(const PhysicalParams& p);

/// Rotation-induced Sagnac-Fizeau shift for mechanical angular velocity omega.
double sagnac_shift(const PhysicalParams& p, double omega);

/// Collapse physical constants and spin state into the six-rate model.
ReducedParams to_reduced(const PhysicalParams& p, const SpinConfig& s);

/// A named parameter set matching one of the reference scenarios.
struct Preset {
    std::string name;
    PhysicalParams physical;
    SpinConfig spin;
    double sweep_min = 0.0;  // rad/s
    double sweep_max = 0.0;
    bool single_resonator = false;  // true for the one-resonator comparison setup
    std::string label;

    ReducedParams reduced() const { return to_reduced(physical, spin); }
};

/// Catalog lookup; throws invalid_parameter listing valid names on a miss.
const Preset& load_preset(const std::string& name);

/// Names in the embedded catalog, in a fixed order.
std::vector<std::string> preset_names();

}  // namespace spincirc

#endif
