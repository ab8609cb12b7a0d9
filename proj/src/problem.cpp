#include "rosenau/problem.hpp"

#include <cmath>
#include <sstream>

#include "internal.hpp"
#include "rosenau/errors.hpp"

namespace rosenau {

namespace {

constexpr int kValidationGrid = 4096;
constexpr double kConvexityFloor = 1e-12;
constexpr double kQuadTol = 1e-12;

}  // namespace

WaveProblem::WaveProblem(FluxSpec flux, double u_minus, double u_plus, double alpha)
    : flux_(std::move(flux)), u_minus_(u_minus), u_plus_(u_plus), alpha_(alpha) {}

WaveProblem WaveProblem::validate(FluxSpec flux, double u_minus, double u_plus,
                                  double alpha) {
  if (!(u_minus > u_plus))
    domain_fail("bad_interval", "u_minus must exceed u_plus");
  if (!(alpha >= 0.0)) domain_fail("negative_alpha", "alpha must be >= 0");

  // Strict convexity on the interval: grid scan, then refine the bracket
  // around the grid minimum so interior zeros between nodes are caught.
  {
    const double h = (u_minus - u_plus) / (kValidationGrid - 1);
    int worst = 0;
    double fmin = flux.d2f(u_plus);
    for (int i = 1; i < kValidationGrid; ++i) {
      const double v = (i == kValidationGrid - 1) ? u_minus : u_plus + h * i;
      const double d2 = flux.d2f(v);
      if (d2 < fmin) {
        fmin = d2;
        worst = i;
      }
    }
    const double lo = u_plus + h * std::max(0, worst - 1);
    const double hi = u_plus + h * std::min(kValidationGrid - 1, worst + 1);
    auto refined = detail::golden_max(
        [&](double v) { return -flux.d2f(v); }, lo, std::min(hi, u_minus), 1e-12);
    fmin = std::min(fmin, -refined.second);
    if (!(fmin > kConvexityFloor)) {
      std::ostringstream os;
      os << "flux is not strictly convex on [" << u_plus << ", " << u_minus
         << "] (min f'' = " << fmin << ")";
      domain_fail("non_convex_flux", os.str());
    }
  }

  WaveProblem p(std::move(flux), u_minus, u_plus, alpha);
  const double L = u_minus - u_plus;

  if (p.flux_.is_burgers()) {
    p.lambda_ = 0.5 * (u_plus + u_minus);
  } else {
    p.lambda_ = (p.flux_.f(u_plus) - p.flux_.f(u_minus)) / (u_plus - u_minus);
  }

  // g as a polynomial: f(v) - f(u+) - lambda (v - u+).
  p.g_coeffs_ = p.flux_.coeffs();
  if (p.g_coeffs_.size() < 2) p.g_coeffs_.resize(2, 0.0);
  p.g_coeffs_[0] += -p.flux_.f(u_plus) + p.lambda_ * u_plus;
  p.g_coeffs_[1] -= p.lambda_;
  auto A = detail::poly_antiderivative(p.g_coeffs_);
  A[0] = -detail::poly_eval(A, u_plus);
  p.G_coeffs_ = std::move(A);

  if (p.flux_.is_burgers()) {
    // g(v) = (v-u+)(v-u-)/2, so the derived scalars are closed forms.
    p.s_max_ = L * L / 8.0;
    p.s_argmax_ = 0.5 * (u_plus + u_minus);
    p.k_int_ = L * L * L / 12.0;
    p.half_alpha_bound_ = 3.0 * L * L / 32.0;
    p.half_alpha_argmax_ = u_plus + 0.75 * L;
  } else {
    auto neg_g = [&](double v) { return -p.g_unchecked(v); };
    auto [sv, smax] =
        detail::grid_golden_max(neg_g, u_plus, u_minus, kValidationGrid, 1e-13 * L);
    p.s_max_ = smax;
    p.s_argmax_ = sv;
    p.k_int_ = detail::integrate_adaptive(
        [&](double v) { return std::abs(p.g_unchecked(v)); }, u_plus, u_minus,
        kQuadTol);
    auto phi = [&](double v) {
      const double x = v - u_plus;
      if (x <= 0) return 0.0;
      return detail::integrate_adaptive(
                 [&](double s) { return std::abs(p.g_unchecked(s)); }, u_plus, v,
                 kQuadTol) /
             x;
    };
    auto [pv, pmax] = detail::grid_golden_max(phi, u_plus + 1e-9 * L, u_minus, 2048,
                                              1e-11 * L);
    p.half_alpha_bound_ = pmax;
    p.half_alpha_argmax_ = pv;
  }

  if (!(p.s_max_ > 0) || !(p.k_int_ > 0))
    domain_fail("non_convex_flux", "degenerate reaction: S or K vanished");
  return p;
}

double WaveProblem::g(double v) const {
  if (v < u_plus_ || v > u_minus_) {
    std::ostringstream os;
    os << "v = " << v << " outside [" << u_plus_ << ", " << u_minus_ << "]";
    domain_fail("out_of_interval", os.str());
  }
  return g_unchecked(v);
}

double WaveProblem::g_unchecked(double v) const noexcept {
  if (flux_.is_burgers()) return 0.5 * (v - u_plus_) * (v - u_minus_);
  return detail::poly_eval(g_coeffs_, v);
}

double WaveProblem::dg(double v) const noexcept { return flux_.df(v) - lambda_; }

double WaveProblem::G(double v) const {
  return detail::poly_eval(G_coeffs_, v);
}

}  // namespace rosenau
