#ifndef SPINCIRC_ANALYSIS_HPP
#define SPINCIRC_ANALYSIS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "spincirc/scattering.hpp"

namespace spincirc {

/// The four canonical port cycles.  CW: 1-2-3-4-1, CCW: 1-4-3-2-1,
/// POS8: 1-2-4-3-1, REV8: 1-3-4-2-1 (the two figure-eight routes crossing
/// between the waveguides).
enum class Direction : int { CW = 0, CCW = 1, POS8 = 2, REV8 = 3 };

const char* direction_name(Direction d);

/// Ports in visiting order, starting at port 1.
const std::array<int, 4>& cycle_ports(Direction d);

/// Directed edges (i, pi(i)) of the cycle, 1-based ports.
const std::array<std::pair<int, int>, 4>& cycle_edges(Direction d);

/// Transmission tables over a detuning grid.
struct SweepResult {
    std::vector<double> deltas;             // strictly increasing
    std::vector<Eigen::Matrix4d> tables;    // T_{i->j} at tables[k](j-1, i-1)
    ReducedParams params;
};

/// Uniform grid sweep, endpoints included, each point via smatrix.
SweepResult sweep(const ReducedParams& rp, double delta_min, double delta_max,
                  int steps);

/// Same grid contract for the single-resonator comparison model.
SweepResult sweep_single(double gamma_a, double gamma_b, double delta_f,
                         double chi, double delta_min, double delta_max, int steps);

/// Minimum edge transmission along the cycle; a circulator is only as good
/// as its worst hop.
double circulation_fidelity(const Eigen::Matrix4d& t, Direction d);

/// Mean edge transmission along the cycle (diagnostic companion).
double mean_cycle_transmission(const Eigen::Matrix4d& t, Direction d);

/// An analytic circulator-frequency candidate.
struct Candidate {
    double delta = 0.0;
    Direction direction = Direction::CW;
};

/// Detunings where the cross-waveguide transfer of each travelling sector is
/// extremal (chi = 0 only):
///   delta = (dF2 - dF1)/2 +- sqrt(J^2 - Ga*Gb + (dF1 + dF2)^2/4)   (REV8)
///   delta = (dF1 - dF2)/2 +- sqrt(J^2 - Ga*Gb + (dF1 + dF2)^2/4)   (POS8)
/// Empty when the radical is negative (overdamped coupling).  Duplicates
/// within 1 Hz of each other (same direction) are merged; sorted by delta.
std::vector<Candidate> closed_form_points(const ReducedParams& rp);

/// A detected circulator operating point.
struct CirculatorPoint {
    double delta = 0.0;
    std::array<int, 4> cycle{};   // ports in visiting order
    Direction direction = Direction::CW;
    double fidelity = 0.0;        // min edge transmission
    double mean_fidelity = 0.0;   // mean edge transmission
};

/// Coarse 4096-point grid of the best-cycle fidelity followed by
/// golden-section refinement of each local maximum; returns maxima with
/// fidelity >= threshold, ordered by delta.  When two cycles tie at a point
/// both are reported, ordered CW < CCW < POS8 < REV8.
std::vector<CirculatorPoint> find_circulator_points(const ReducedParams& rp,
                                                    double delta_min,
                                                    double delta_max,
                                                    double threshold);

enum class RoutingFormula { none, plus, minus };

/// Outcome of the complete-routing search.
struct RoutingResult {
    double delta_star = 0.0;   // optimal detuning
    double shift_star = 0.0;   // optimal symmetric Sagnac shift magnitude
    double min_cross = 0.0;    // min of the four cross-waveguide transmissions
    RoutingFormula matched = RoutingFormula::none;
    double candidate_plus = 0.0;   // sqrt(J^2 + Ga*Gb)
    double candidate_minus = 0.0;  // sqrt(J^2 - Ga*Gb)
};

/// Searches opposite symmetric shifts dF1 = -dF2 = D and detuning delta for
/// the point where every photon crosses to the other waveguide.  Requires
/// chi = 0 and gamma_a = gamma_b in the template; j and gammas are used.
/// Throws non_convergence if min_cross < 0.999 at the optimum.
RoutingResult find_complete_routing(const ReducedParams& rp_template);

/// Peak of T_{1->3} over a refined sweep for one labelled scenario.
struct RobustnessReport {
    std::string label;
    double peak = 0.0;      // max T_{1->3}
    double location = 0.0;  // rad/s
};

std::vector<RobustnessReport> backscatter_report(
    const std::vector<std::pair<std::string, ReducedParams>>& scenarios,
    double delta_min, double delta_max);

}  // namespace spincirc

#endif
