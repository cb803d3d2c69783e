#include "dsge/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dsge {

namespace {

double clamp1(double x) { return std::max(-1.0, std::min(1.0, x)); }

} // namespace

double cubic_discriminant(double p, double q) {
  return q * q / 4.0 + p * p * p / 27.0;
}

std::array<Complex, 3> solve_depressed_cubic(double p, double q) {
  // x^3 + p x = q
  const double delta = cubic_discriminant(p, q);
  const double scale =
      std::max({std::abs(q * q / 4.0), std::abs(p * p * p / 27.0), 1e-300});

  if (delta <= 0.0 || (std::abs(delta) < 1e-14 * scale && p < 0.0)) {
    // three real roots; trigonometric form avoids branch-cut noise near
    // the double/triple-root boundary
    if (p >= 0.0) {
      // only reachable when p and q are both ~0: triple root at 0
      const double x = std::cbrt(q);
      return {Complex(x, 0), Complex(x, 0), Complex(x, 0)};
    }
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = clamp1(4.0 * q / (m * m * m));
    const double t = std::acos(arg) / 3.0;
    std::array<Complex, 3> out;
    for (int k = 0; k < 3; ++k)
      out[k] = Complex(m * std::cos(t - 2.0 * kPi * k / 3.0), 0.0);
    return out;
  }

  // one real root; pairing u*v = -p/3 holds automatically for real cbrt
  const double sd = std::sqrt(delta);
  const double u = std::cbrt(q / 2.0 + sd);
  const double v = std::cbrt(q / 2.0 - sd);
  const double re = -(u + v) / 2.0;
  const double im = std::sqrt(3.0) / 2.0 * (u - v);
  return {Complex(u + v, 0), Complex(re, im), Complex(re, -im)};
}

std::array<Complex, 3> solve_cubic(double c3, double c2, double c1,
                                   double c0) {
  const double b = c2 / c3, c = c1 / c3, d = c0 / c3;
  // x = y - b/3: y^3 + P y - Q = 0
  const double P = c - b * b / 3.0;
  const double Q = -(d + 2.0 * b * b * b / 27.0 - b * c / 3.0);
  auto y = solve_depressed_cubic(P, Q);
  for (auto& z : y) z -= b / 3.0;
  return y;
}

std::pair<double, double> resolvent_cubic(const QuarticPoly& q) {
  const double e2 = -q.theta2;
  const double e1 = q.theta1 * q.theta3 - 4.0 * q.theta4;
  const double e0 =
      -(q.theta4 * (q.theta1 * q.theta1 - 4.0 * q.theta2) + q.theta3 * q.theta3);
  // depress x = y - e2/3
  const double phi2 = e1 - e2 * e2 / 3.0;
  const double phi3 = -(e0 + 2.0 * e2 * e2 * e2 / 27.0 - e2 * e1 / 3.0);
  return {phi2, phi3};
}

namespace {

// One-root Newton polish on the quartic; keeps the best iterate.
Complex polish_quartic_root(const QuarticPoly& q, Complex z) {
  Complex best = z;
  double best_res = std::abs(q.eval(z));
  for (int it = 0; it < 16; ++it) {
    const Complex g = q.eval(z);
    const Complex dg = q.deriv(z);
    if (std::abs(dg) < 1e-30) break;
    const Complex step = g / dg;
    z -= step;
    const double res = std::abs(q.eval(z));
    if (res < best_res) {
      best_res = res;
      best = z;
    }
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
  }
  return best;
}

// Real quartics have conjugate-closed root sets; repair rounding drift by
// pairing each root with the nearest conjugate partner.
void symmetrize_conjugates(std::array<Complex, 4>& a) {
  std::array<bool, 4> used{};
  for (int i = 0; i < 4; ++i) {
    if (used[i]) continue;
    const double sc = 1.0 + std::abs(a[i]);
    if (std::abs(a[i].imag()) < 1e-14 * sc) continue;
    int best = -1;
    double bd = std::numeric_limits<double>::max();
    for (int j = 0; j < 4; ++j) {
      if (j == i || used[j]) continue;
      const double dist = std::abs(a[j] - std::conj(a[i]));
      if (dist < bd) {
        bd = dist;
        best = j;
      }
    }
    if (best >= 0 && bd < 1e-6 * sc) {
      const Complex z = (a[i] + std::conj(a[best])) / 2.0;
      a[i] = z;
      a[best] = std::conj(z);
      used[i] = used[best] = true;
    }
  }
}

} // namespace

QuarticRoots solve_quartic(const QuarticPoly& q) {
  QuarticRoots out;
  auto [phi2, phi3] = resolvent_cubic(q);
  out.resolvent.phi2 = phi2;
  out.resolvent.phi3 = phi3;
  out.resolvent.delta = cubic_discriminant(phi2, phi3);

  const auto y = solve_depressed_cubic(phi2, phi3);
  const double shift = q.theta2 / 3.0; // undo the resolvent depression
  for (int i = 0; i < 3; ++i) out.resolvent.betas[i] = y[i] + shift;

  const double t1sq = q.theta1 * q.theta1;
  std::array<Complex, 3> g;
  for (int i = 0; i < 3; ++i)
    g[i] = std::sqrt(t1sq - 4.0 * q.theta2 + 4.0 * out.resolvent.betas[i]);

  // sign pattern of (gamma2, gamma3) relative to gamma1 fixed by the
  // product constraint; deterministic lexicographic tie-break
  const double target =
      8.0 * q.theta3 - 4.0 * q.theta1 * q.theta2 + t1sq * q.theta1;
  int best_pat = 0;
  double best_err = std::numeric_limits<double>::max();
  for (int pat = 0; pat < 4; ++pat) {
    const double s2 = (pat & 1) ? -1.0 : 1.0;
    const double s3 = (pat & 2) ? -1.0 : 1.0;
    const double err = std::abs(g[0] * (s2 * g[1]) * (s3 * g[2]) - target);
    if (err < best_err - 1e-30) {
      best_err = err;
      best_pat = pat;
    }
  }
  if (best_pat & 1) g[1] = -g[1];
  if (best_pat & 2) g[2] = -g[2];
  out.resolvent.gammas = g;

  out.alphas[0] = (q.theta1 + g[0] + g[1] + g[2]) / 4.0;
  out.alphas[1] = (q.theta1 + g[0] - g[1] - g[2]) / 4.0;
  out.alphas[2] = (q.theta1 - g[0] + g[1] - g[2]) / 4.0;
  out.alphas[3] = (q.theta1 - g[0] - g[1] + g[2]) / 4.0;

  for (auto& z : out.alphas) z = polish_quartic_root(q, z);
  symmetrize_conjugates(out.alphas);
  return out;
}

std::vector<Complex> roots_all(std::span<const double> coeffs_high_to_low) {
  std::vector<double> c(coeffs_high_to_low.begin(), coeffs_high_to_low.end());
  if (c.empty()) return {};
  double amax = 0.0;
  for (double x : c) amax = std::max(amax, std::abs(x));
  if (amax == 0.0) return {};
  // strip negligible leading coefficients (roots at infinity)
  size_t lead = 0;
  while (lead + 1 < c.size() && std::abs(c[lead]) < 1e-13 * amax) ++lead;
  c.erase(c.begin(), c.begin() + lead);
  const size_t n = c.size() - 1;
  if (n == 0) return {};

  std::vector<Complex> monic(n);
  for (size_t i = 1; i <= n; ++i) monic[i - 1] = Complex(c[i] / c[0], 0.0);

  auto eval = [&](Complex z) {
    Complex v(1.0, 0.0);
    for (size_t i = 0; i < n; ++i) v = v * z + monic[i];
    return v;
  };
  auto eval_d = [&](Complex z) {
    Complex v(1.0, 0.0), dv(0.0, 0.0);
    for (size_t i = 0; i < n; ++i) {
      dv = dv * z + v;
      v = v * z + monic[i];
    }
    return dv;
  };

  double radius = 0.0;
  for (const auto& m : monic) radius = std::max(radius, std::abs(m));
  radius = 1.0 + radius;

  std::vector<Complex> z(n);
  const Complex seed(0.4, 0.9);
  Complex acc(1.0, 0.0);
  for (size_t i = 0; i < n; ++i) {
    acc *= seed;
    z[i] = radius * acc / std::abs(acc) * (0.3 + 0.7 * double(i + 1) / n);
  }

  for (int it = 0; it < 600; ++it) {
    double moved = 0.0;
    for (size_t i = 0; i < n; ++i) {
      Complex denom(1.0, 0.0);
      for (size_t j = 0; j < n; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (std::abs(denom) < 1e-280) {
        z[i] += Complex(1e-8, 1e-8);
        continue;
      }
      const Complex delta = eval(z[i]) / denom;
      z[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * radius) break;
  }
  for (auto& zi : z) {
    for (int it = 0; it < 8; ++it) {
      const Complex d = eval_d(zi);
      if (std::abs(d) < 1e-30) break;
      const Complex step = eval(zi) / d;
      if (!(std::abs(step) < 1.0)) break;
      zi -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(zi))) break;
    }
  }
  return z;
}

} // namespace dsge
