#include "rosenau/singular.hpp"

#include <cmath>
#include <sstream>

#include "internal.hpp"
#include "rosenau/analytic.hpp"
#include "rosenau/errors.hpp"

namespace rosenau {

namespace {

// phi(w) = w/(1+w^2)^alpha on w <= 0. Strictly increasing for alpha <= 1/2;
// for alpha > 1/2 it has a single interior minimum at -1/sqrt(2 alpha - 1)
// of depth -response_peak(alpha).
double phi(double w, double alpha) { return w / std::pow(1.0 + w * w, alpha); }

// Bisection on a monotone piece with phi(lo) and phi(hi) straddling target.
double bisect_phi(double lo, double hi, double target, double alpha) {
  double flo = phi(lo, alpha) - target;
  if (flo == 0.0) return lo;
  double fhi = phi(hi, alpha) - target;
  if (fhi == 0.0) return hi;
  for (int it = 0; it < 200 && lo < hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = phi(mid, alpha) - target;
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SingularBranches branch_solve(const WaveProblem& problem, double alpha,
                              double epsilon, double v) {
  if (!(epsilon > 0.0)) domain_fail("bad_epsilon", "epsilon must be > 0");
  if (v < problem.u_plus() || v > problem.u_minus()) {
    std::ostringstream os;
    os << "v = " << v << " outside [" << problem.u_plus() << ", "
       << problem.u_minus() << "]";
    domain_fail("out_of_interval", os.str());
  }

  const double target = problem.g_unchecked(v) / epsilon;  // <= 0
  SingularBranches out;
  if (target == 0.0) {
    out.w_plus = 0.0;
    return out;
  }

  if (alpha > 0.5) {
    const double wc = -1.0 / std::sqrt(2.0 * alpha - 1.0);
    const double depth = phi(wc, alpha);  // = -response_peak(alpha)
    if (target < depth) return out;       // no roots: eps below the threshold
    out.w_plus = bisect_phi(wc, 0.0, target, alpha);
    // phi -> 0 from below as w -> -inf, so a bracket for the deep root always
    // appears after finitely many doublings.
    double wlo = 2.0 * wc;
    while (phi(wlo, alpha) <= target) wlo *= 2.0;
    out.w_minus = bisect_phi(wlo, wc, target, alpha);
    if (*out.w_minus > *out.w_plus) std::swap(*out.w_minus, *out.w_plus);
    return out;
  }

  // Monotone response. For alpha = 1/2 the range is (-1, 0]; a target at or
  // below -1 has no root.
  if (alpha == 0.5 && target <= -1.0) return out;
  double wlo = -1.0;
  while (phi(wlo, alpha) > target) {
    wlo *= 2.0;
    if (wlo < -1e120)
      domain_fail("unrepresentable_root",
                  "branch root magnitude exceeds 1e120 (alpha too close to 1/2)");
  }
  out.w_plus = bisect_phi(wlo, 0.0, target, alpha);
  return out;
}

HadelerRothe hadeler_rothe(const WaveProblem& problem, double alpha) {
  if (!(alpha > 0.5))
    domain_fail("alpha_below_half", "hadeler_rothe needs alpha > 1/2");
  const double S = problem.S();
  // sup over v of (1/A)(1 + A^2 g^2)^alpha sits at the g-minimiser, |g| = S.
  auto value_at = [&](double logA) {
    const double A = std::exp(logA);
    return std::pow(1.0 + A * A * S * S, alpha) / A;
  };
  // Coarse scan, then golden section on log A.
  const double lo = std::log(1e-8), hi = std::log(1e8);
  int best = 0;
  double fbest = value_at(lo);
  const int n = 481;
  for (int i = 1; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double fx = value_at(x);
    if (fx < fbest) {
      fbest = fx;
      best = i;
    }
  }
  const double bl = lo + (hi - lo) * std::max(0, best - 1) / (n - 1);
  const double bh = lo + (hi - lo) * std::min(n - 1, best + 1) / (n - 1);
  auto [xm, fm] = detail::golden_max([&](double x) { return -value_at(x); }, bl, bh,
                                     1e-13);
  HadelerRothe out;
  out.a_star = std::exp(xm);
  out.value = -fm;
  return out;
}

double eps_star(const WaveProblem& problem) {
  const double up = problem.u_plus();
  const double L = problem.width();
  auto ratio = [&](double v) {
    const double x = v - up;
    if (x <= 0) return 0.0;
    return std::abs(problem.G(v)) / x;
  };
  auto [vmax, val] =
      detail::grid_golden_max(ratio, up + 1e-9 * L, problem.u_minus(), 4096, 1e-13 * L);
  (void)vmax;
  return val;
}

double SingularProfile::predicted_min_w(double delta) const {
  return -z0_max / std::sqrt(delta);
}

SingularProfile z0_profile(const WaveProblem& problem, double epsilon, int n_grid) {
  if (n_grid < 8) domain_fail("bad_grid", "n_grid must be at least 8");
  const double up = problem.u_plus();
  const double um = problem.u_minus();
  const double es = eps_star(problem);
  if (epsilon < es * (1.0 - 1e-12)) {
    std::ostringstream os;
    os << "epsilon = " << epsilon << " below eps_star = " << es
       << "; the radicand dips negative";
    domain_fail("radicand_negative", os.str());
  }

  auto radicand = [&](double v) { return problem.G(v) + epsilon * (v - up); };

  SingularProfile prof;
  prof.epsilon = epsilon;
  prof.eps_star = es;
  prof.v.resize(static_cast<std::size_t>(n_grid));
  prof.G.resize(static_cast<std::size_t>(n_grid));
  prof.Z0.resize(static_cast<std::size_t>(n_grid));
  for (int i = 0; i < n_grid; ++i) {
    const double v =
        (i == n_grid - 1) ? um : up + (um - up) * i / (n_grid - 1);
    const double rho = std::max(0.0, radicand(v));
    prof.v[static_cast<std::size_t>(i)] = v;
    prof.G[static_cast<std::size_t>(i)] = problem.G(v);
    prof.Z0[static_cast<std::size_t>(i)] = std::sqrt(2.0 * rho);
  }

  auto [vmax, rmax] =
      detail::grid_golden_max(radicand, up, um, 4096, 1e-14 * problem.width());
  prof.z0_max = std::sqrt(2.0 * std::max(0.0, rmax));
  prof.z0_argmax = vmax;
  return prof;
}

std::vector<BranchSample> branch_sweep(const WaveProblem& problem, double alpha,
                                       double epsilon, int n_grid) {
  if (n_grid < 2) domain_fail("bad_grid", "n_grid must be at least 2");
  std::vector<BranchSample> out(static_cast<std::size_t>(n_grid));
  const double up = problem.u_plus();
  const double um = problem.u_minus();
  for (int i = 0; i < n_grid; ++i) {
    const double v = (i == n_grid - 1) ? um : up + (um - up) * i / (n_grid - 1);
    out[static_cast<std::size_t>(i)] = {v, branch_solve(problem, alpha, epsilon, v)};
  }
  return out;
}

}  // namespace rosenau
