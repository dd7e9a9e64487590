#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace rsn {

// Thrown when a quadrature or linear-algebra routine fails to reach its
// target accuracy (distinct from bad arguments, which use std::domain_error
// or std::invalid_argument). The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// floor with a small forward nudge.  Quantities like n*(1+alpha)/2 are
// integer-valued for the rational alphas used throughout; the nudge keeps
// floor() from landing one below when the product is computed in binary.
inline long floor_nudged(double v) {
  return static_cast<long>(std::floor(v + 1e-9));
}

inline constexpr double kPi = 3.14159265358979323846264338328;

}  // namespace rsn
