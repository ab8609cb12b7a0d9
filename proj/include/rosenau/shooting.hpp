#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rosenau/ode.hpp"
#include "rosenau/problem.hpp"

namespace rosenau {

enum class ClassKind {
  monotone_main,        // captured, terminal slope on the main (slow) side
  monotone_side,        // captured, terminal slope on the side (fast) side
  monotone_degenerate,  // captured, but eps is too close to eps0 to tell
  non_monotone,         // crossed v = u+ (or turned upward) before capture
  unresolved,           // escaped, step floor, or ran out of time/steps
};

const char* to_string(ClassKind kind);

struct Classification {
  ClassKind kind = ClassKind::unresolved;
  int crossings = 0;   // v = u+ crossings before capture; >= 1 if non_monotone
  std::string reason;  // set when unresolved

  bool monotone() const noexcept {
    return kind == ClassKind::monotone_main || kind == ClassKind::monotone_side ||
           kind == ClassKind::monotone_degenerate;
  }
};

struct ShootResult {
  Classification cls;
  Orbit orbit;
  std::optional<double> entry_slope;  // present iff monotone
};

struct ShootOptions {
  double offset_rel = 1e-7;  // launch offset relative to u- - u+
  // Entry direction is ill-posed at a degenerate node; shots with
  // eps < eps0 + margin are labelled monotone_degenerate.
  double degeneracy_margin = 1e-5;
  std::optional<IntegratorConfig> config;  // defaults_for(problem) when empty
};

/// Point on the unstable manifold of the saddle (u-, 0):
/// (u-, 0) - offset (1, theta_+)/|(1, theta_+)|, into v < u-, w < 0.
PhaseState launch_state(const WaveProblem& problem, double delta, double epsilon,
                        double offset);

/// Launches the unstable manifold and classifies the resulting orbit.
/// Requires delta > 0, epsilon >= 0; integrator failures come back as
/// Unresolved, not exceptions.
ShootResult shoot(const WaveProblem& problem, double delta, double epsilon);
ShootResult shoot(const WaveProblem& problem, double delta, double epsilon,
                  const ShootOptions& options);

struct BisectionResult {
  double eps_min = 0;
  std::pair<double, double> bracket{0, 0};
  int iterations = 0;
  Classification entry_at_min;
};

struct BisectOptions {
  // Seed the lower bracket with the analytic lower bounds (c_alpha, the
  // averaged-integral bound at alpha = 1/2, mu_alpha) on top of eps0.
  // Disable to verify those bounds against the shooting answer.
  bool use_bound_bracket = true;
  std::optional<double> upper_hint;  // warm start for the doubling search
  ShootOptions shoot;
};

/// Bisection of the monotone/non-monotone indicator in eps. The set of
/// monotone eps is an upward ray, so the indicator is monotone and the lower
/// bracket may start at eps0 (a spiral admits no monotone wave). Unresolved
/// shots count as non-monotone. Throws "bracket_failure" if doubling the
/// upper bracket 20 times never produces a monotone shot.
BisectionResult eps_min(const WaveProblem& problem, double delta, double tol);
BisectionResult eps_min(const WaveProblem& problem, double delta, double tol,
                        const BisectOptions& options);

struct CurvePoint {
  double delta = 0;
  double eps_min = 0;  // NaN when the point failed
  double eps0 = 0;
  Classification entry;
  int iterations = 0;
};

/// eps_min per grid point, each point computed independently so the output is
/// identical for any worker count. workers = 0 uses all available threads.
/// Per-point bracket failures are recorded in the point, not thrown.
std::vector<CurvePoint> boundary_curve(const WaveProblem& problem,
                                       std::span<const double> delta_grid,
                                       double tol, int workers = 0);

/// Serial reference for the parallel sweep. With warm_start the doubling
/// search is seeded from the previous point (opt-in; may move results within
/// the bisection tolerance).
std::vector<CurvePoint> boundary_curve_serial(const WaveProblem& problem,
                                              std::span<const double> delta_grid,
                                              double tol, bool warm_start = false);

/// Grid helper: n points from a to b, log- or linearly spaced, endpoints
/// included.
std::vector<double> make_grid(double a, double b, int n, bool log_spaced);

}  // namespace rosenau
