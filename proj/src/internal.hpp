#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace rosenau::detail {

inline double poly_eval(const std::vector<double>& c, double x) {
  double r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

inline std::vector<double> poly_derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

inline std::vector<double> poly_antiderivative(const std::vector<double>& c) {
  std::vector<double> a(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) a[k + 1] = c[k] / static_cast<double>(k + 1);
  return a;
}

// Adaptive Simpson quadrature to absolute tolerance tol.
template <typename F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
double integrate_adaptive(const F& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Golden-section maximisation of a unimodal function on [a, b].
template <typename F>
std::pair<double, double> golden_max(const F& f, double a, double b, double xtol) {
  constexpr double invphi = 0.6180339887498949;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 300 && (b - a) > xtol; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

// Grid scan followed by golden refinement of the bracket around the best
// grid point. Catches narrow dips a plain grid check would step over.
template <typename F>
std::pair<double, double> grid_golden_max(const F& f, double a, double b, int n,
                                          double xtol) {
  int best = 0;
  double fbest = f(a);
  const double h = (b - a) / static_cast<double>(n - 1);
  for (int i = 1; i < n; ++i) {
    const double x = (i == n - 1) ? b : a + h * i;
    const double fx = f(x);
    if (fx > fbest) {
      fbest = fx;
      best = i;
    }
  }
  const double lo = (best == 0) ? a : a + h * (best - 1);
  const double hi = (best == n - 1) ? b : a + h * (best + 1);
  auto refined = golden_max(f, lo, hi, xtol);
  if (refined.second >= fbest) return refined;
  return {(best == n - 1) ? b : a + h * best, fbest};
}

}  // namespace rosenau::detail
