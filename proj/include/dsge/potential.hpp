#pragma once

#include <vector>

#include "dsge/params.hpp"

namespace dsge {

enum class ExtremumKind { AbsMin, RelMin, AbsMax, RelMax };

inline const char* kind_name(ExtremumKind k) {
  switch (k) {
    case ExtremumKind::AbsMin: return "abs-min";
    case ExtremumKind::RelMin: return "rel-min";
    case ExtremumKind::AbsMax: return "abs-max";
    case ExtremumKind::RelMax: return "rel-max";
  }
  return "?";
}

struct Extremum {
  double theta = 0.0;        // location in [0, 2*pi)
  double value = 0.0;        // V(theta)
  ExtremumKind kind = ExtremumKind::AbsMin;
  double tan_half = 0.0;     // tan(theta/2); +infinity encodes theta == pi
  double second_deriv = 0.0; // V''(theta)
  bool degenerate = false;   // |V''| below tolerance
};

struct ExtremumSet {
  std::vector<Extremum> items; // ascending theta
  DsgeParams params;
  bool degenerate = false; // any stationary point flagged degenerate

  const Extremum* find(ExtremumKind k) const {
    for (const auto& e : items)
      if (e.kind == k) return &e;
    return nullptr;
  }
};

/// V(theta) = -cos(theta + phi) - eta*cos(2*theta)
double eval_potential(double theta, const DsgeParams& p);

/// dV/dtheta = sin(theta + phi) + 2*eta*sin(2*theta)
double eval_potential_gradient(double theta, const DsgeParams& p);

/// d2V/dtheta2 = cos(theta + phi) + 4*eta*cos(2*theta)
double eval_potential_hessian(double theta, const DsgeParams& p);

/// All stationary points of V in [0, 2*pi), classified. For sin(phi) != 0
/// the points are the real roots t of the tan-half-angle quartic mapped by
/// theta = 2*arctan(t); for sin(phi) == 0 the factored form
/// sin(theta)*(cos(phi) + 4*eta*cos(theta)) = 0 is used directly (this is
/// also where theta = pi can be stationary, which tan-half cannot reach).
/// Every root is Newton-polished on the gradient.
ExtremumSet find_extrema(const DsgeParams& p);

struct ActionResult {
  double S = 0.0; // action, -V at the branch stationary point
  Extremum extremum;
};

/// Action for the requested branch: S = -V(theta_branch). Throws
/// NoSuchBranch when the branch's stationary point does not exist (a
/// relative minimum only exists in the multi-well regimes).
ActionResult action_from_branch(const DsgeParams& p, Branch branch);

} // namespace dsge
