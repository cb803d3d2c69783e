#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace dsge {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Problem instance: the double sine-Gordon potential is
/// V(theta) = -cos(theta + phi) - eta*cos(2*theta).
struct DsgeParams {
  double eta = 0.0;   // second-harmonic coefficient
  double phi = 0.0;   // tilt phase, radians, canonical range [0, pi]
  double tol = 1e-10; // numerical tolerance

  bool valid() const {
    return tol > 0.0 && std::isfinite(eta) && std::isfinite(phi);
  }
};

enum class Branch { AbsoluteMin, RelativeMin };

enum class SignChoice { Plus, Minus };

inline const char* branch_name(Branch b) {
  return b == Branch::AbsoluteMin ? "abs-min" : "rel-min";
}

// Error taxonomy. Data-dependent failures that callers are expected to
// handle are typed; precondition violations use std::invalid_argument.
struct NoSuchBranch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoRealRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonRealizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NegativeRSquared : std::runtime_error {
  explicit NegativeRSquared(double r2)
      : std::runtime_error("r^2 = " + std::to_string(r2) +
                           " < 0: no real argument scale on this branch"),
        r_squared(r2) {}
  double r_squared;
};
struct NegativeRadicand : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentVieta : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InadmissibleKind : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace dsge
