#include "dsge/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dsge/polyroots.hpp"

namespace dsge {

double eval_potential(double theta, const DsgeParams& p) {
  return -std::cos(theta + p.phi) - p.eta * std::cos(2.0 * theta);
}

double eval_potential_gradient(double theta, const DsgeParams& p) {
  return std::sin(theta + p.phi) + 2.0 * p.eta * std::sin(2.0 * theta);
}

double eval_potential_hessian(double theta, const DsgeParams& p) {
  return std::cos(theta + p.phi) + 4.0 * p.eta * std::cos(2.0 * theta);
}

namespace {

double wrap_2pi(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  if (t >= 2.0 * kPi) t = 0.0;
  return t;
}

// Newton on the gradient; falls back to the seed when the iteration leaves
// its basin (degenerate stationary points have V'' ~ 0).
double polish_stationary(double theta, const DsgeParams& p) {
  double t = theta;
  for (int it = 0; it < 60; ++it) {
    const double g = eval_potential_gradient(t, p);
    const double h = eval_potential_hessian(t, p);
    if (std::abs(h) < 1e-9) break;
    const double step = g / h;
    if (std::abs(step) > 0.5) break;
    t -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return t;
}

} // namespace

ExtremumSet find_extrema(const DsgeParams& p) {
  ExtremumSet set;
  set.params = p;

  const double sphi = std::sin(p.phi);
  const double cphi = std::cos(p.phi);
  std::vector<double> seeds;

  if (std::abs(sphi) < 1e-12) {
    // factored gradient: sin(theta) * (cos(phi) + 4 eta cos(theta)) = 0
    const double csign = cphi >= 0.0 ? 1.0 : -1.0;
    seeds.push_back(0.0);
    seeds.push_back(kPi);
    if (std::abs(p.eta) > 1e-300) {
      const double ct = -csign / (4.0 * p.eta);
      if (std::abs(ct) <= 1.0) {
        const double t = std::acos(ct);
        seeds.push_back(t);
        seeds.push_back(2.0 * kPi - t);
      }
    }
  } else {
    // tan-half-angle quartic for the stationary condition; real roots map
    // to theta = 2 arctan(t). theta = pi is never stationary here.
    QuarticPoly q{(2.0 * cphi - 8.0 * p.eta) / sphi, 0.0,
                  (2.0 * cphi + 8.0 * p.eta) / sphi, -1.0};
    const auto roots = solve_quartic(q);
    for (const auto& alpha : roots.alphas) {
      if (std::abs(alpha.imag()) < 1e-6 * (1.0 + std::abs(alpha.real())))
        seeds.push_back(2.0 * std::atan(alpha.real()));
    }
  }

  std::vector<Extremum> items;
  for (double seed : seeds) {
    double theta = wrap_2pi(polish_stationary(seed, p));
    const double grad = eval_potential_gradient(theta, p);
    if (std::abs(grad) > 1e-7) continue; // spurious near-real quartic root
    bool dup = false;
    for (const auto& e : items) {
      double diff = std::abs(e.theta - theta);
      diff = std::min(diff, 2.0 * kPi - diff);
      if (diff < 1e-7) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    Extremum e;
    e.theta = theta;
    e.value = eval_potential(theta, p);
    e.second_deriv = eval_potential_hessian(theta, p);
    e.degenerate = std::abs(e.second_deriv) < p.tol;
    e.tan_half = std::abs(theta - kPi) < 1e-12
                     ? std::numeric_limits<double>::infinity()
                     : std::tan(theta / 2.0);
    items.push_back(e);
  }

  std::sort(items.begin(), items.end(),
            [](const Extremum& x, const Extremum& y) { return x.theta < y.theta; });

  double vmin = std::numeric_limits<double>::max();
  double vmax = -std::numeric_limits<double>::max();
  for (const auto& e : items) {
    vmin = std::min(vmin, e.value);
    vmax = std::max(vmax, e.value);
  }
  const double vtol = std::max(p.tol, 1e-12);
  for (auto& e : items) {
    if (e.second_deriv >= 0.0)
      e.kind = e.value <= vmin + vtol ? ExtremumKind::AbsMin : ExtremumKind::RelMin;
    else
      e.kind = e.value >= vmax - vtol ? ExtremumKind::AbsMax : ExtremumKind::RelMax;
    set.degenerate = set.degenerate || e.degenerate;
  }
  set.items = std::move(items);
  return set;
}

ActionResult action_from_branch(const DsgeParams& p, Branch branch) {
  const ExtremumSet set = find_extrema(p);
  const ExtremumKind want =
      branch == Branch::AbsoluteMin ? ExtremumKind::AbsMin : ExtremumKind::RelMin;
  const Extremum* best = nullptr;
  for (const auto& e : set.items) {
    if (e.kind != want) continue;
    if (!best || std::abs(e.tan_half) < std::abs(best->tan_half)) best = &e;
  }
  if (!best)
    throw NoSuchBranch(std::string("no ") +
                       (branch == Branch::AbsoluteMin ? "absolute" : "relative") +
                       " minimum for eta=" + std::to_string(p.eta) +
                       ", phi=" + std::to_string(p.phi));
  return ActionResult{-best->value, *best};
}

} // namespace dsge
