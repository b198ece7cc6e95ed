#ifndef SPINCIRC_VALIDATE_HPP
#define SPINCIRC_VALIDATE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace spincirc {

/// Result of one randomized invariant suite.
struct SuiteResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    int samples = 0;
    bool passed = false;
};

/// Runs the randomized cross-validation suites (unitarity, closed-form and
/// real-space oracle equivalence, forbidden amplitudes, mirror symmetry,
/// transpose reversal) over seeded random parameter samples.
std::vector<SuiteResult> run_validation(int samples = 1000, std::uint64_t seed = 42);

/// True when every suite passed.
bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace spincirc

#endif
