#ifndef SPINCIRC_ERRORS_HPP
#define SPINCIRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spincirc {

// Bad user-supplied parameters or configuration.
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The resolvent solve hit a numerically singular system.
struct singular_resolvent : std::runtime_error {
    explicit singular_resolvent(double delta)
        : std::runtime_error("singular resolvent at delta = " + std::to_string(delta) +
                             " rad/s (condition number above 1e12)"),
          delta(delta) {}
    double delta;
};

// An iterative search failed to reach its target quality.
struct non_convergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace spincirc

#endif
