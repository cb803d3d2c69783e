#pragma once

#include <array>
#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace dsge {

using Complex = std::complex<double>;

/// Monic quartic in alternating-sign Vieta convention:
///   g(f) = f^4 - theta1*f^3 + theta2*f^2 - theta3*f + theta4
/// so that theta1 = sum of roots, theta2 = sum of pair products,
/// theta3 = sum of triple products, theta4 = product of roots.
struct QuarticPoly {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  double theta4 = 0.0;

  Complex eval(Complex f) const {
    return (((f - theta1) * f + theta2) * f - theta3) * f + theta4;
  }
  Complex deriv(Complex f) const {
    return ((4.0 * f - 3.0 * theta1) * f + 2.0 * theta2) * f - theta3;
  }
};

/// Resolvent cubic data. The betas are the pairwise-product combinations
/// {a1a2+a3a4, a1a3+a2a4, a1a4+a2a3} of the quartic roots; phi2/phi3 are
/// the coefficients of the depressed form h(x) = x^3 + phi2*x - phi3
/// obtained after removing the theta2 shift.
struct ResolventData {
  double phi2 = 0.0;
  double phi3 = 0.0;
  double delta = 0.0; // phi3^2/4 + phi2^3/27
  std::array<Complex, 3> betas{};
  std::array<Complex, 3> gammas{};
};

struct QuarticRoots {
  std::array<Complex, 4> alphas{};
  ResolventData resolvent;
};

/// Roots of x^3 + p*x - q = 0. When the discriminant q^2/4 + p^3/27 is
/// positive exactly one root is real; otherwise all three are real and
/// returned with zero imaginary part (trigonometric evaluation).
std::array<Complex, 3> solve_depressed_cubic(double p, double q);

/// q^2/4 + p^3/27 for x^3 + p*x - q.
double cubic_discriminant(double p, double q);

/// Roots of a general cubic c3*x^3 + c2*x^2 + c1*x + c0 (c3 != 0).
std::array<Complex, 3> solve_cubic(double c3, double c2, double c1, double c0);

/// Depressed resolvent coefficients (phi2, phi3) for h(x) = x^3 + phi2*x - phi3.
/// The undepressed resolvent of g is
///   x^3 - theta2*x^2 + (theta1*theta3 - 4*theta4)*x
///       - (theta4*(theta1^2 - 4*theta2) + theta3^2),
/// whose roots are exactly the pairwise-product betas.
std::pair<double, double> resolvent_cubic(const QuarticPoly& q);

/// Closed-form quartic roots via the resolvent cubic, with the gamma-sign
/// pattern chosen to match gamma1*gamma2*gamma3 = 8*theta3 - 4*theta1*theta2
/// + theta1^3, followed by a Newton polish and conjugate pairing.
QuarticRoots solve_quartic(const QuarticPoly& q);

/// All complex roots of a dense polynomial, coefficients highest degree
/// first, by Durand-Kerner iteration with a Newton polish. Leading
/// coefficients that are negligibly small relative to the largest entry are
/// stripped (degree reduction); the corresponding roots at infinity are
/// dropped.
std::vector<Complex> roots_all(std::span<const double> coeffs_high_to_low);

} // namespace dsge
