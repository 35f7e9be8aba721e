#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace critpoly {

/// Malformed or out-of-contract input (non-finite values, size mismatches,
/// violated preconditions such as roots outside the unit disk).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative solver ran out of iterations. Carries the best iterate so
/// callers can inspect or report it.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::complex<double> best_center = {},
                     double best_value = 0.0, int iterations = 0)
        : std::runtime_error(what),
          best_center_(best_center),
          best_value_(best_value),
          iterations_(iterations) {}

    std::complex<double> best_center() const noexcept { return best_center_; }
    double best_value() const noexcept { return best_value_; }
    int iterations() const noexcept { return iterations_; }

private:
    std::complex<double> best_center_;
    double best_value_;
    int iterations_;
};

}  // namespace critpoly
