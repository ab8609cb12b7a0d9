#include "rosenau/analytic.hpp"

#include <cmath>

#include "rosenau/errors.hpp"

namespace rosenau {

double eps0(const WaveProblem& problem, double delta) {
  if (!(delta >= 0.0)) domain_fail("negative_delta", "delta must be >= 0");
  return 2.0 * std::sqrt(delta) * std::sqrt(-problem.dg(problem.u_plus()));
}

EigenData eigen_data(const WaveProblem& problem, double delta, double epsilon) {
  if (!(delta > 0.0)) domain_fail("zero_delta", "delta must be > 0");
  if (!(epsilon >= 0.0)) domain_fail("bad_epsilon", "epsilon must be >= 0");
  EigenData ed;
  const double gp_plus = problem.dg(problem.u_plus());    // < 0
  const double gp_minus = problem.dg(problem.u_minus());  // > 0
  const double r = epsilon / delta;
  const double disc = r * r + 4.0 * gp_plus / delta;
  if (disc >= 0.0) {
    ed.is_node = true;
    const double s = std::sqrt(disc);
    ed.chi_plus = 0.5 * (-r + s);
    ed.chi_minus = 0.5 * (-r - s);
  }
  ed.theta_plus =
      2.0 * gp_minus / (epsilon + std::sqrt(epsilon * epsilon + 4.0 * delta * gp_minus));
  return ed;
}

double h_closed_form(const WaveProblem& problem, double alpha) {
  if (alpha < 0.5) domain_fail("alpha_below_half", "h_closed_form needs alpha >= 1/2");
  if (alpha == 0.5) return problem.S();  // the formula is 0*inf there; use the limit
  const double q = 2.0 * alpha - 1.0;
  return std::pow(2.0, alpha) * problem.S() * std::pow(alpha / q, alpha) * std::sqrt(q);
}

double tangency_point(double alpha) {
  if (!(alpha > 0.5)) domain_fail("alpha_below_half", "tangency_point needs alpha > 1/2");
  return -1.0 / std::sqrt(2.0 * alpha - 1.0);
}

double response_peak(double alpha) {
  if (!(alpha > 0.5)) domain_fail("alpha_below_half", "response_peak needs alpha > 1/2");
  return std::pow(2.0 * alpha, -alpha) * std::pow(2.0 * alpha - 1.0, alpha - 0.5);
}

BoundsReport bounds_report(const WaveProblem& problem, double alpha,
                           std::optional<double> delta) {
  if (!(alpha >= 0.0)) domain_fail("negative_alpha", "alpha must be >= 0");
  BoundsReport r;
  r.half_alpha_bound = problem.half_alpha_bound();
  if (delta) r.eps0 = eps0(problem, *delta);
  if (alpha <= 0.5 && delta) {
    r.c_alpha_bound = std::pow(*delta, 0.5 - alpha) * std::pow(2.0, alpha - 0.5) *
                      std::pow(problem.K(), alpha + 0.5) / problem.width();
  }
  if (alpha >= 0.5) r.h_alpha = h_closed_form(problem, alpha);
  if (alpha > 0.5) {
    const double a = response_peak(alpha);
    r.mu_alpha = r.half_alpha_bound / a;
    r.delta_alpha_lower = 0.25 * (*r.mu_alpha) * (*r.mu_alpha);
  }
  return r;
}

}  // namespace rosenau
