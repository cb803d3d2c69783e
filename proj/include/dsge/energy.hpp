#pragma once

#include <functional>
#include <optional>
#include <string>

#include "dsge/params.hpp"

namespace dsge {

enum class ClassicalKind : int; // see classical.hpp

struct EnergyReport {
  std::optional<double> closed_form;
  double quadrature = 0.0;
  std::optional<double> difference;
  std::string branch;
  bool flagged = false; // |difference| > 1e-6 or closed_form <= 0
};

/// (1/sqrt(2)) * integral over [theta_lo, theta_hi] of
/// sqrt(S - cos(theta+phi) - eta*cos(2*theta)) d theta.
/// Endpoint square-root singularities are handled by the quadrature rule;
/// radicand values within tol below zero are clamped. Throws
/// NegativeRadicand if the radicand is genuinely negative inside the
/// interval (wrong S/bounds pairing).
double quadrature_Vs(const DsgeParams& p, double S, double theta_lo,
                     double theta_hi);

struct ProfileEnergy {
  double value = 0.0;         // integral of theta_s^2 over [-window, window]
  double tail_estimate = 0.0; // estimated contribution beyond the window
};

/// Renormalized energy of a profile: integral of theta_s^2 ds over the
/// window, derivative by 5-point central differences (h = 1e-4).
ProfileEnergy energy_of_profile(const std::function<double(double)>& theta,
                                double s_window);

/// Same, with a caller-supplied analytic derivative.
ProfileEnergy energy_of_profile(const std::function<double(double)>& theta,
                                const std::function<double(double)>& theta_s,
                                double s_window);

/// Closed form vs quadrature for one classical branch. The quadrature value
/// is normative; the report is flagged when the printed closed form
/// deviates by more than 1e-6 or is non-positive.
EnergyReport compare_energy(ClassicalKind kind, double eta);

} // namespace dsge
