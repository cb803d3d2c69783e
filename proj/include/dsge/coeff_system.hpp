#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dsge/params.hpp"

namespace dsge {

/// Unknowns of the simultaneous algebraic system obtained by substituting
/// the sinh-type ansatz into the first integral and comparing powers of
/// sinh: (a, b, c, d, r, S).
struct SystemCandidate {
  double a = 0, b = 0, c = 0, d = 0;
  double r = 0;
  double S = 0;
  DsgeParams params;
};

struct SolveReport {
  SystemCandidate candidate;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool obstruction = false;
  std::vector<double> residual_history; // per-iteration norms
};

/// The six residuals, in the order
///   [(ad-bc)^2 - 1, R_b, R_c, R_d - 2 r^2, R_e, R_f - 2 r^2]
/// where R_b..R_f are the doubled sinh-power coefficients of the
/// substituted first integral (regenerated symbolically; the commonly
/// printed variant with the opposite cos-phi signs fails the phi = 0
/// fixture by an O(1) amount).
std::array<double, 6> power_residuals(const SystemCandidate& cand);

/// Damped Newton iteration on the six residuals with a finite-difference
/// Jacobian (step 1e-7), damping halved on residual increase, at most 200
/// iterations; converged iff the residual norm is below 1e-10. The
/// converged candidate is gauge-fixed to b >= 0, r >= 0.
SolveReport solve_power_system(const DsgeParams& p, SystemCandidate guess);

/// The phi -> pi - phi symmetry: (a,b,c,d,r,S) -> (-c, d, -a, b, r, S).
SystemCandidate mirror_candidate(const SystemCandidate& cand);

struct ObstructionVerdict {
  bool contradiction = false;
  double r = 0.0;          // sqrt(1 - 4*eta) when consistent
  bool degenerate = false; // r = 0 boundary at eta = 1/4
};

/// The half-pi self-symmetric reduction (a = -c, b = d): the scaling forces
/// a != 0, hence S = 1 - eta, and the remaining equations give
/// r^2 = 1 - 4*eta. Contradiction iff eta > 1/4.
ObstructionVerdict obstruction_check(double eta, double tol = 1e-10);

struct ContinuationStep {
  double phi = 0.0;
  SolveReport report;
  double jump = 0.0; // ||delta(a,b,c,d,r,S)|| from the previous converged step
};

struct ContinuationResult {
  std::vector<ContinuationStep> steps;
  bool obstruction = false;
  double last_converged_phi = 0.0;
};

/// Continuation in phi with warm starts; the step is halved on failure and
/// an obstruction is declared when it falls below 1e-4.
ContinuationResult continue_in_phi(const DsgeParams& start,
                                   const SystemCandidate& warm,
                                   double phi_target, int steps);

} // namespace dsge
