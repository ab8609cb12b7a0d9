#pragma once

#include <vector>

#include "rosenau/flux.hpp"

namespace rosenau {

/// Validated travelling-wave problem: flux, end states u- > u+, diffusion
/// exponent alpha, with derived scalars cached.
///
/// The wave speed is the Rankine-Hugoniot ratio of the flux values, and
///   g(v) = f(v) - f(u+) - lambda (v - u+)
/// vanishes at both end states and is strictly negative in between.
class WaveProblem {
public:
  /// Checks u- > u+, alpha >= 0 and strict convexity of the flux on the
  /// interval, then precomputes lambda, S, K and the averaged-integral bound.
  /// Throws DomainError: "bad_interval", "negative_alpha", "non_convex_flux".
  static WaveProblem validate(FluxSpec flux, double u_minus, double u_plus,
                              double alpha);

  const FluxSpec& flux() const noexcept { return flux_; }
  double u_minus() const noexcept { return u_minus_; }
  double u_plus() const noexcept { return u_plus_; }
  double alpha() const noexcept { return alpha_; }
  double lambda() const noexcept { return lambda_; }
  double width() const noexcept { return u_minus_ - u_plus_; }

  /// max of -g over [u+, u-] and its maximiser.
  double S() const noexcept { return s_max_; }
  double s_argmax() const noexcept { return s_argmax_; }

  /// integral of |g| over [u+, u-].
  double K() const noexcept { return k_int_; }

  /// max over v of (1/(v-u+)) * integral_{u+}^{v} |g|, and its maximiser.
  double half_alpha_bound() const noexcept { return half_alpha_bound_; }
  double half_alpha_argmax() const noexcept { return half_alpha_argmax_; }

  /// g at v; throws DomainError "out_of_interval" outside [u+, u-].
  double g(double v) const;
  /// g at v, no interval check (the phase flow leaves the strip).
  double g_unchecked(double v) const noexcept;
  /// g'(v) = f'(v) - lambda.
  double dg(double v) const noexcept;
  /// Antiderivative of g with G(u+) = 0; exact for polynomial fluxes.
  double G(double v) const;

private:
  WaveProblem(FluxSpec flux, double u_minus, double u_plus, double alpha);

  FluxSpec flux_;
  double u_minus_, u_plus_, alpha_;
  double lambda_ = 0;
  double s_max_ = 0, s_argmax_ = 0;
  double k_int_ = 0;
  double half_alpha_bound_ = 0, half_alpha_argmax_ = 0;
  std::vector<double> g_coeffs_;  // g as a polynomial (ascending powers)
  std::vector<double> G_coeffs_;  // its antiderivative, constant term at u+
};

}  // namespace rosenau
