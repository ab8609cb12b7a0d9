#pragma once

#include <optional>
#include <vector>

#include "rosenau/problem.hpp"

namespace rosenau {

/// Roots w <= 0 of eps w/(1+w^2)^alpha = g(v) at a fixed v. w_plus is the
/// root of smaller |w|, w_minus the deeper one; they coincide at tangency and
/// may both be absent (alpha > 1/2 with eps below the closed-form threshold).
struct SingularBranches {
  std::optional<double> w_plus;
  std::optional<double> w_minus;
};

/// Bracketed bisection split at the stationary point of w -> w/(1+w^2)^alpha
/// (at -1/sqrt(2 alpha - 1) for alpha > 1/2; the response is monotone for
/// alpha <= 1/2). Requires v in [u+, u-] and eps > 0.
SingularBranches branch_solve(const WaveProblem& problem, double alpha,
                              double epsilon, double v);

struct HadelerRothe {
  double a_star = 0;  // minimising scale A
  double value = 0;   // inf_A sup_v (1/A)(1 + A^2 g(v)^2)^alpha
};

/// Min-max evaluation of the delta -> 0 threshold: the inner sup sits at the
/// g-minimiser (value S), the outer inf is found by golden section on log A.
/// Independent route to h_closed_form; alpha > 1/2.
HadelerRothe hadeler_rothe(const WaveProblem& problem, double alpha);

/// max over v in (u+, u-] of |G(v)|/(v - u+), by dense grid plus
/// golden-section refinement. Equals the alpha = 1/2 averaged-integral bound.
double eps_star(const WaveProblem& problem);

/// Leading-order rescaled profile of the heteroclinic as delta -> 0 at
/// alpha = 1/2: Z0(v) = sqrt(2) sqrt(G(v) + eps (v - u+)) on a uniform grid.
struct SingularProfile {
  std::vector<double> v;
  std::vector<double> G;
  std::vector<double> Z0;
  double epsilon = 0;   // the eps the profile was built with
  double eps_star = 0;  // minimal eps keeping the radicand nonnegative
  double z0_max = 0;
  double z0_argmax = 0;

  /// Predicted heteroclinic depth for small delta: min w ~ -max(Z0)/sqrt(delta).
  double predicted_min_w(double delta) const;
};

/// Requires epsilon >= eps_star ("radicand_negative" otherwise).
SingularProfile z0_profile(const WaveProblem& problem, double epsilon,
                           int n_grid = 2048);

/// Branch roots on a uniform v-grid, for CSV emission.
struct BranchSample {
  double v = 0;
  SingularBranches roots;
};
std::vector<BranchSample> branch_sweep(const WaveProblem& problem, double alpha,
                                       double epsilon, int n_grid);

}  // namespace rosenau
