#pragma once

#include <optional>

#include "rosenau/problem.hpp"

namespace rosenau {

/// Linearisation data at both rest points.
///
/// chi_-/chi_+ are the eigenvalues of the stable point (u+, 0) when it is a
/// node (is_node); below the node threshold it is a spiral and the chis are
/// unset. theta_+ is the unstable eigenvalue of the saddle (u-, 0), computed
/// in the cancellation-free form 2 g'(u-) / (eps + sqrt(eps^2 + 4 delta g'(u-))).
struct EigenData {
  bool is_node = false;
  double chi_plus = 0;
  double chi_minus = 0;
  double theta_plus = 0;
};

/// Spiral/node threshold at (u+, 0): eps0(delta) = 2 sqrt(delta) sqrt(-g'(u+)).
/// Independent of alpha. Requires delta >= 0.
double eps0(const WaveProblem& problem, double delta);

/// Requires delta > 0, epsilon >= 0. A spiral is a value, not an error.
EigenData eigen_data(const WaveProblem& problem, double delta, double epsilon);

/// Closed form for the minimal epsilon admitting a smooth monotone wave at
/// delta = 0, alpha > 1/2:
///   H(alpha) = 2^alpha S (alpha/(2 alpha - 1))^alpha sqrt(2 alpha - 1).
/// At alpha = 1/2 returns the limit S. Throws "alpha_below_half" below 1/2.
double h_closed_form(const WaveProblem& problem, double alpha);

/// Location z = -1/sqrt(2 alpha - 1) of the double root of the tangency
/// system behind H(alpha). Requires alpha > 1/2.
double tangency_point(double alpha);

/// max over z > 0 of z/(1+z^2)^alpha = (2 alpha)^{-alpha} (2 alpha-1)^{alpha-1/2},
/// alpha > 1/2.
double response_peak(double alpha);

/// Analytic lower bounds and thresholds. Fields are set when applicable:
/// c_alpha_bound for alpha <= 1/2 (needs delta), mu_alpha/delta_alpha_lower
/// for alpha > 1/2, h_alpha for alpha >= 1/2, eps0 when delta is given.
struct BoundsReport {
  std::optional<double> eps0;
  std::optional<double> h_alpha;
  std::optional<double> c_alpha_bound;   // delta^{1/2-alpha} 2^{alpha-1/2} K^{alpha+1/2} / (u- - u+)
  double half_alpha_bound = 0;           // max_v (1/(v-u+)) int |g|
  std::optional<double> mu_alpha;        // half_alpha_bound / response_peak(alpha)
  std::optional<double> delta_alpha_lower;  // mu_alpha^2 / 4
};

BoundsReport bounds_report(const WaveProblem& problem, double alpha,
                           std::optional<double> delta = {});

}  // namespace rosenau
