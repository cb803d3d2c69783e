#include "dsge/energy.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "dsge/classical.hpp"
#include "dsge/potential.hpp"

namespace dsge {

double quadrature_Vs(const DsgeParams& p, double S, double theta_lo,
                     double theta_hi) {
  if (theta_hi < theta_lo) std::swap(theta_lo, theta_hi);
  if (theta_hi - theta_lo < 1e-15) return 0.0;

  const double scale = std::abs(S) + 1.0 + std::abs(p.eta);
  auto radicand = [&](double th) {
    return S - std::cos(th + p.phi) - p.eta * std::cos(2.0 * th);
  };
  // a genuinely negative radicand inside the interval means the S/bounds
  // pairing is wrong; values within tol below zero are rounding and clamp
  const int nscan = 2001;
  for (int i = 0; i <= nscan; ++i) {
    const double th = theta_lo + (theta_hi - theta_lo) * i / nscan;
    if (radicand(th) < -p.tol * scale)
      throw NegativeRadicand("radicand negative at theta=" + std::to_string(th));
  }

  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double th) { return std::sqrt(std::max(radicand(th), 0.0)); };
  const double val = integrator.integrate(f, theta_lo, theta_hi, 1e-12);
  return val / std::sqrt(2.0);
}

namespace {

ProfileEnergy integrate_profile(const std::function<double(double)>& theta_s,
                                double L) {
  using boost::math::quadrature::gauss_kronrod;
  auto integrand = [&](double s) {
    const double d = theta_s(s);
    return d * d;
  };
  const double value =
      gauss_kronrod<double, 61>::integrate(integrand, -L, L, 12, 1e-12);

  // exponential-tail estimate from the decay rate over the last unit
  auto tail_at = [&](double edge, double inner) {
    const double de = std::abs(theta_s(edge));
    const double di = std::abs(theta_s(inner));
    if (de < 1e-300) return 0.0;
    double lambda = di > de ? std::log(di / de) : 1.0;
    lambda = std::min(std::max(lambda, 0.1), 50.0);
    return de * de / (2.0 * lambda);
  };
  ProfileEnergy out;
  out.value = value;
  out.tail_estimate = tail_at(L, L - 1.0) + tail_at(-L, -(L - 1.0));
  return out;
}

} // namespace

ProfileEnergy energy_of_profile(const std::function<double(double)>& theta,
                                double s_window) {
  const double h = 1e-4;
  auto deriv = [theta, h](double s) {
    return (theta(s - 2 * h) - 8.0 * theta(s - h) + 8.0 * theta(s + h) -
            theta(s + 2 * h)) /
           (12.0 * h);
  };
  return integrate_profile(deriv, s_window);
}

ProfileEnergy energy_of_profile(const std::function<double(double)>&,
                                const std::function<double(double)>& theta_s,
                                double s_window) {
  return integrate_profile(theta_s, s_window);
}

EnergyReport compare_energy(ClassicalKind kind, double eta) {
  const ClassicalSolution sol = make_classical(kind, eta); // admissibility
  const double closed = closed_form_energy_value(kind, eta);
  const double S = classical_action(sol);
  DsgeParams p{eta, 0.0};

  double quad = 0.0;
  switch (kind) {
    case ClassicalKind::LargeKinkCase1: {
      const double phi0 = std::acos(-1.0 / (4.0 * eta));
      quad = 2.0 * quadrature_Vs(p, S, phi0, 2.0 * kPi - phi0);
      break;
    }
    case ClassicalKind::SmallKinkCase1: {
      const double phi0 = std::acos(-1.0 / (4.0 * eta));
      quad = 2.0 * quadrature_Vs(p, S, -phi0, phi0);
      break;
    }
    case ClassicalKind::KinkCase23:
      quad = 2.0 * quadrature_Vs(p, S, 0.0, 2.0 * kPi);
      break;
    case ClassicalKind::BubbleCase3: {
      // twice the half-bubble, from the midpoint to the relative minimum
      const double th0 = 2.0 * std::atan(1.0 / std::sqrt(4.0 * eta - 1.0));
      quad = 2.0 * (2.0 * quadrature_Vs(p, S, th0, kPi));
      break;
    }
  }

  EnergyReport rep;
  rep.closed_form = closed;
  rep.quadrature = quad;
  rep.difference = closed - quad;
  rep.branch = classical_kind_name(kind);
  rep.flagged = std::abs(closed - quad) > 1e-6 || closed <= 0.0;
  return rep;
}

} // namespace dsge
