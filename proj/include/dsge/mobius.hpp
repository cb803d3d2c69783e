#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "dsge/energy.hpp"
#include "dsge/params.hpp"
#include "dsge/potential.hpp"

namespace dsge {

/// Coefficients of the first integral after f = tan(theta/2):
///   (df/ds)^2 = a4 f^4 + a3 f^3 + a2 f^2 + a1 f + a0
/// with a4 = (S - eta + cos phi)/2, a3 = a1 = sin phi, a2 = S + 3 eta,
/// a0 = (S - eta - cos phi)/2. The split of a4/a0 is fixed by the
/// substitution identity (see tests); only the sum a4 + a0 = S - eta is
/// convention independent.
struct FirstIntegralQuartic {
  double a4 = 0.0, a3 = 0.0, a2 = 0.0, a1 = 0.0, a0 = 0.0;
  double source_S = 0.0;
};

FirstIntegralQuartic first_integral_quartic(const DsgeParams& p, double S);

enum class WaveKernel { Sinh, Cosh, Exp };

inline const char* kernel_name(WaveKernel k) {
  switch (k) {
    case WaveKernel::Sinh: return "sinh";
    case WaveKernel::Cosh: return "cosh";
    case WaveKernel::Exp: return "exp";
  }
  return "?";
}

/// f(s) = (a*W(r s) + b)/(c*W(r s) + d) with W one of sinh/cosh/exp.
/// Evaluation of theta = 2*arctan(f) is continuously lifted across
/// denominator zeros.
struct RationalWave {
  WaveKernel kernel = WaveKernel::Sinh;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  double r = 1.0;
  double lift_base = 0.0; // constant 2*pi*n alignment
};

double wave_f(const RationalWave& w, double s);
double wave_theta(const RationalWave& w, double s);
double wave_theta_deriv(const RationalWave& w, double s);
/// s locations where the denominator vanishes (0, 1 or 2 of them).
std::vector<double> wave_poles(const RationalWave& w);

/// Complete sinh-type solution record:
///   theta = 2*arctan((a sinh(rs) + b)/(c sinh(rs) + d))
struct MobiusSolution {
  std::complex<double> f0{}, f1{}; // simple turning-point roots
  double f3 = 0.0;                 // double root, tan(theta_inf / 2)
  double S = 0.0;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0; // real, (ad-bc)^2 = 1
  double r = 0.0;                            // argument scale, > 0
  DsgeParams params;
  Branch branch = Branch::AbsoluteMin;

  RationalWave wave() const {
    return RationalWave{WaveKernel::Sinh, a, b, c, d, r, lift_base};
  }
  double lift_base = 0.0;
};

struct BranchPoint {
  double f3 = 0.0; // +-infinity encodes an asymptote at theta = pi
  double S = 0.0;
  Extremum extremum;
};

/// Asymptote data for the requested branch: the stationary point is found
/// through the extremum quartic (closed-form quartic solver) for
/// sin phi != 0, and through the factored gradient otherwise; S = -V there.
BranchPoint solve_f3_S(const DsgeParams& p, Branch branch);

/// Intermediate coefficients of the successive degree reductions and the
/// resultant condition big_a*big_d = big_b*big_c.
struct EliminationTrace {
  double a1 = 0, b1 = 0, c1 = 0;
  double a2 = 0, b2 = 0, c2 = 0;
  double big_a = 0, big_b = 0, big_c = 0, big_d = 0;
  double consistency = 0; // |big_a*big_d - big_b*big_c|
  bool degenerate = false; // leading coefficient vanished; GCD fallback used
};

struct EliminationCandidate {
  double f3 = 0.0;
  double S = 0.0;
  EliminationTrace trace;
};

/// Independent route to the (f3, S) pairs: eliminate f3 between the
/// double-root conditions, producing a polynomial in S whose real roots are
/// candidate actions; each candidate is verified against both double-root
/// equations and Newton-polished. Requires sin phi != 0.
std::vector<EliminationCandidate> euclidean_eliminate(const DsgeParams& p);

/// Turning points f0, f1 from the Vieta system, given a valid (f3, S):
/// sum t and product q of the simple roots follow from the monic quartic's
/// first two symmetric functions; the remaining two act as a consistency
/// check (InconsistentVieta when violated). f3 = +-infinity selects the
/// reversed-coefficient route.
std::pair<std::complex<double>, std::complex<double>>
recover_f0_f1(double f3, double S, const DsgeParams& p);

/// Assemble the sinh-type solution: raw complex Moebius coefficients from
/// the root data, realized by a common unit-modulus scalar, rescaled to
/// (ad - bc)^2 = 1, with r^2 = A4 (ad-bc)^2 / (c^2 (c^2 + d^2)). Throws
/// NonRealizable when no scalar realizes the coefficients (the branch is
/// not of sinh type) and NegativeRSquared when r^2 < 0.
MobiusSolution build_mobius(std::complex<double> f0, std::complex<double> f1,
                            double f3, double S, const DsgeParams& p,
                            Branch branch = Branch::AbsoluteMin);

double eval_theta(const MobiusSolution& sol, double s);
double eval_theta_derivative(const MobiusSolution& sol, double s);

/// max over the grid of |(1/2)(dtheta/ds)^2 + cos(theta+phi) +
/// eta*cos(2 theta) - S| with the analytic derivative.
double residual(const MobiusSolution& sol, std::span<const double> s_grid);

/// Non-sinh root patterns, constructed from the same quartic data.
struct HyperbolicProfile {
  RationalWave wave;
  double S = 0.0;
  std::complex<double> f0{}, f1{};
  double f3 = 0.0; // may be +-infinity
  DsgeParams params;
  Branch branch = Branch::RelativeMin;
};

/// Homoclinic (bubble) profile for the relative-minimum branch: the simple
/// roots are real, the normal form is cosh-type. side selects which side of
/// the well the bubble dips into.
HyperbolicProfile build_bubble(const DsgeParams& p,
                               SignChoice side = SignChoice::Plus);

/// Kink between two distinct equal-depth minima (degenerate pair, e.g.
/// phi = 0 with eta < -1/4): exp-type normal form. through_pole selects the
/// branch crossing theta = pi (the large kink) versus the bounded one.
HyperbolicProfile build_pair_kink(const DsgeParams& p, bool through_pole,
                                  SignChoice sign = SignChoice::Plus);

double eval_theta(const HyperbolicProfile& prof, double s);
double eval_theta_derivative(const HyperbolicProfile& prof, double s);
double residual(const HyperbolicProfile& prof, std::span<const double> s_grid);

/// Default evaluation grid: n points on [-span, span]/r.
std::vector<double> default_grid(double r, double span = 10.0, int n = 2001);

/// Energy of a wave profile over [-window, window] with the analytic
/// derivative.
ProfileEnergy wave_energy(const RationalWave& w, double window);

} // namespace dsge
