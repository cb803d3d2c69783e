#include "dsge/classical.hpp"

#include <cmath>
#include <string>

namespace dsge {

Regime classify_regime(double eta, double tol) {
  if (std::abs(std::abs(eta) - 0.25) < tol) return Regime::DegenerateQuarter;
  if (eta < -0.25) return Regime::Case1;
  if (eta > 0.25) return Regime::Case3;
  return Regime::Case2;
}

namespace {

// admissibility is evaluated at the effective eta (mirrored for HalfPi)
void check_admissible(ClassicalKind kind, double eta) {
  const Regime reg = classify_regime(eta);
  if (reg == Regime::DegenerateQuarter)
    throw InadmissibleKind("|eta| = 1/4: widths vanish or diverge, no closed form");
  const bool ok = (kind == ClassicalKind::LargeKinkCase1 && reg == Regime::Case1) ||
                  (kind == ClassicalKind::SmallKinkCase1 && reg == Regime::Case1) ||
                  (kind == ClassicalKind::KinkCase23 && eta > -0.25) ||
                  (kind == ClassicalKind::BubbleCase3 && reg == Regime::Case3);
  if (!ok)
    throw InadmissibleKind(std::string(classical_kind_name(kind)) +
                           " not admissible at eta=" + std::to_string(eta));
}

double width_of(ClassicalKind kind, double eta) {
  switch (kind) {
    case ClassicalKind::LargeKinkCase1:
    case ClassicalKind::SmallKinkCase1:
      return std::sqrt((16.0 * eta * eta - 1.0) / (16.0 * std::abs(eta)));
    case ClassicalKind::KinkCase23:
      return std::sqrt(1.0 + 4.0 * eta);
    case ClassicalKind::BubbleCase3:
      return std::sqrt(4.0 * eta - 1.0);
  }
  return 0.0;
}

// zero-phase profiles, continuously lifted across the s = 0 pole
double eval_zero_phase(ClassicalKind kind, double eta, SignChoice sign,
                       double s) {
  const double sg = sign == SignChoice::Plus ? 1.0 : -1.0;
  const double w = width_of(kind, eta);
  switch (kind) {
    case ClassicalKind::KinkCase23: {
      const double k = std::sqrt(1.0 + 4.0 * eta);
      if (s == 0.0) return kPi;
      const double raw = 2.0 * std::atan(sg * k / std::sinh(w * s));
      return raw + (sg > 0 ? (s < 0 ? 2.0 * kPi : 0.0)
                           : (s > 0 ? 2.0 * kPi : 0.0));
    }
    case ClassicalKind::LargeKinkCase1: {
      const double k = std::sqrt((4.0 * std::abs(eta) - 1.0) /
                                 (4.0 * std::abs(eta) + 1.0));
      if (s == 0.0) return kPi;
      const double raw = 2.0 * std::atan(sg * k / std::tanh(w * s));
      return raw + (sg > 0 ? (s < 0 ? 2.0 * kPi : 0.0)
                           : (s > 0 ? 2.0 * kPi : 0.0));
    }
    case ClassicalKind::SmallKinkCase1: {
      const double k = std::sqrt((4.0 * std::abs(eta) - 1.0) /
                                 (4.0 * std::abs(eta) + 1.0));
      return 2.0 * std::atan(sg * k * std::tanh(w * s));
    }
    case ClassicalKind::BubbleCase3: {
      const double k = 1.0 / std::sqrt(4.0 * eta - 1.0);
      return 2.0 * std::atan(sg * k * std::cosh(w * s));
    }
  }
  return 0.0;
}

} // namespace

ClassicalSolution make_classical(ClassicalKind kind, double eta, Phase phase,
                                 SignChoice sign) {
  const double eff = phase == Phase::HalfPi ? -eta : eta;
  check_admissible(kind, eff);
  ClassicalSolution sol;
  sol.kind = kind;
  sol.eta = eta;
  sol.phase = phase;
  sol.sign = sign;
  sol.width = width_of(kind, eff);
  return sol;
}

double eval_classical(const ClassicalSolution& sol, double s) {
  if (sol.phase == Phase::HalfPi)
    return eval_zero_phase(sol.kind, -sol.eta, sol.sign, s) - kPi / 2.0;
  return eval_zero_phase(sol.kind, sol.eta, sol.sign, s);
}

double classical_action(const ClassicalSolution& sol) {
  const double eta = sol.phase == Phase::HalfPi ? -sol.eta : sol.eta;
  switch (sol.kind) {
    case ClassicalKind::LargeKinkCase1:
    case ClassicalKind::SmallKinkCase1:
      return -eta - 1.0 / (8.0 * eta);
    case ClassicalKind::KinkCase23:
      return 1.0 + eta;
    case ClassicalKind::BubbleCase3:
      return eta - 1.0;
  }
  return 0.0;
}

double closed_form_energy_value(ClassicalKind kind, double eta) {
  switch (kind) {
    case ClassicalKind::LargeKinkCase1: {
      const double phi0 = std::acos(-1.0 / (4.0 * eta));
      return (std::sqrt(16.0 * eta * eta - 1.0) + kPi - phi0) / std::sqrt(-eta);
    }
    case ClassicalKind::SmallKinkCase1: {
      const double phi0 = std::acos(-1.0 / (4.0 * eta));
      return (std::sqrt(16.0 * eta * eta - 1.0) - phi0) / std::sqrt(-eta);
    }
    case ClassicalKind::KinkCase23:
      if (eta == 0.0) return 8.0;
      if (eta > 0.0)
        return 4.0 * std::sqrt(4.0 * eta + 1.0) +
               2.0 * std::log(2.0 * std::sqrt(eta) + std::sqrt(4.0 * eta + 1.0)) /
                   std::sqrt(eta);
      return 4.0 * std::sqrt(4.0 * eta + 1.0) +
             2.0 * std::asin(2.0 * std::sqrt(-eta)) / std::sqrt(-eta);
    case ClassicalKind::BubbleCase3:
      // printed form; known to disagree with the quadrature (reported, not
      // corrected -- see docs/validated_conventions.md)
      return 4.0 * std::sqrt(4.0 * eta - 1.0) -
             4.0 * std::log(2.0 * std::sqrt(eta) + std::sqrt(4.0 * eta - 1.0)) /
                 std::sqrt(eta);
  }
  return 0.0;
}

EnergyReport energy_closed_form(ClassicalKind kind, double eta) {
  return compare_energy(kind, eta);
}

} // namespace dsge
