#pragma once

#include "dsge/energy.hpp"
#include "dsge/params.hpp"

namespace dsge {

enum class ClassicalKind : int {
  LargeKinkCase1, // coth profile, connects the two tilted-well minima
  SmallKinkCase1, // tanh profile, crosses the relative maximum
  KinkCase23,     // csch profile, the 2*pi kink
  BubbleCase3,    // cosh profile, homoclinic to the relative minimum
};

enum class Regime { Case1, Case2, Case3, DegenerateQuarter };

enum class Phase { Zero, HalfPi };

inline const char* classical_kind_name(ClassicalKind k) {
  switch (k) {
    case ClassicalKind::LargeKinkCase1: return "large-kink";
    case ClassicalKind::SmallKinkCase1: return "small-kink";
    case ClassicalKind::KinkCase23: return "kink";
    case ClassicalKind::BubbleCase3: return "bubble";
  }
  return "?";
}

struct ClassicalSolution {
  ClassicalKind kind = ClassicalKind::KinkCase23;
  double eta = 0.0;
  Phase phase = Phase::Zero;
  SignChoice sign = SignChoice::Plus;
  double width = 0.0; // argument scale of the hyperbolic function
};

/// Case1 iff eta < -1/4, Case2 iff |eta| < 1/4, Case3 iff eta > 1/4;
/// DegenerateQuarter within tol of |eta| = 1/4.
Regime classify_regime(double eta, double tol = 1e-10);

/// Validates admissibility (throws InadmissibleKind) and fills the width.
/// For phase HalfPi the admissibility and width are those of the mirrored
/// problem at -eta.
ClassicalSolution make_classical(ClassicalKind kind, double eta,
                                 Phase phase = Phase::Zero,
                                 SignChoice sign = SignChoice::Plus);

/// theta(s) for the closed-form solution, continuously lifted across the
/// csch/coth pole at s = 0. For phase HalfPi returns the mirrored form
/// (Zero-phase profile at -eta, shifted by -pi/2).
double eval_classical(const ClassicalSolution& sol, double s);

/// Action constant of the kind: -V at the asymptotic stationary point.
double classical_action(const ClassicalSolution& sol);

/// The printed closed-form energy for the kind (no correction applied).
double closed_form_energy_value(ClassicalKind kind, double eta);

/// Closed form plus quadrature, packaged; quadrature is normative.
EnergyReport energy_closed_form(ClassicalKind kind, double eta);

} // namespace dsge
