#include "rosenau/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rosenau/analytic.hpp"
#include "rosenau/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rosenau {

const char* to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::monotone_main: return "monotone_main";
    case ClassKind::monotone_side: return "monotone_side";
    case ClassKind::monotone_degenerate: return "monotone_degenerate";
    case ClassKind::non_monotone: return "non_monotone";
    case ClassKind::unresolved: return "unresolved";
  }
  return "unknown";
}

PhaseState launch_state(const WaveProblem& problem, double delta, double epsilon,
                        double offset) {
  const EigenData ed = eigen_data(problem, delta, epsilon);
  const double norm = std::hypot(1.0, ed.theta_plus);
  return {problem.u_minus() - offset / norm, -offset * ed.theta_plus / norm};
}

namespace {

Classification unresolved(std::string reason) {
  Classification c;
  c.kind = ClassKind::unresolved;
  c.reason = std::move(reason);
  return c;
}

// Mean slope w/(v - u+) over samples whose v-distance lies in
// [r_stop, 10 r_stop]; falls back to the capture point itself.
double terminal_slope(const Orbit& orbit, double u_plus, double r_stop) {
  double sum = 0;
  int n = 0;
  for (std::size_t i = orbit.size(); i-- > 0;) {
    const double dv = orbit.y[i].v - u_plus;
    if (dv > 10.0 * r_stop) break;  // v decreases along the approach
    if (dv >= r_stop) {
      sum += orbit.y[i].w / dv;
      ++n;
    }
  }
  if (n > 0) return sum / n;
  const auto* ev = orbit.terminal();
  const double dv = ev->state.v - u_plus;
  if (std::abs(dv) < 1e-300)
    return -std::numeric_limits<double>::infinity();
  return ev->state.w / dv;
}

}  // namespace

ShootResult shoot(const WaveProblem& problem, double delta, double epsilon) {
  return shoot(problem, delta, epsilon, ShootOptions{});
}

ShootResult shoot(const WaveProblem& problem, double delta, double epsilon,
                  const ShootOptions& options) {
  if (!(delta > 0.0)) domain_fail("zero_delta", "delta must be > 0");
  if (!(epsilon >= 0.0)) domain_fail("bad_epsilon", "epsilon must be >= 0");

  const IntegratorConfig cfg =
      options.config ? *options.config : IntegratorConfig::defaults_for(problem);
  const double offset = options.offset_rel * problem.width();

  ShootResult res;
  res.orbit = integrate(problem, delta, epsilon,
                        launch_state(problem, delta, epsilon, offset), cfg);
  const Orbit& orbit = res.orbit;
  const auto* ev = orbit.terminal();

  if (!ev) {
    res.cls = unresolved(orbit.t.empty() || orbit.t.back() < cfg.t_max * 0.999
                             ? "max_steps"
                             : "t_max");
    return res;
  }

  switch (ev->kind) {
    case EventKind::entered_capture_ball: {
      if (orbit.max_w() > 10.0 * cfg.abs_tol) {
        res.cls = unresolved("positive_w_before_capture");
        return res;
      }
      const double slope = terminal_slope(orbit, problem.u_plus(), cfg.r_stop);
      res.entry_slope = slope;
      const EigenData ed = eigen_data(problem, delta, epsilon);
      const double e0 = eps0(problem, delta);
      if (!ed.is_node || epsilon < e0 + options.degeneracy_margin) {
        res.cls.kind = ClassKind::monotone_degenerate;
      } else {
        const double midpoint = 0.5 * (ed.chi_plus + ed.chi_minus);
        res.cls.kind = slope < midpoint ? ClassKind::monotone_side
                                        : ClassKind::monotone_main;
      }
      return res;
    }
    case EventKind::crossed_v_plus:
    case EventKind::crossed_w_zero: {
      int crossings = 0;
      for (const auto& e : orbit.events)
        if (e.kind == EventKind::crossed_v_plus) ++crossings;
      res.cls.kind = ClassKind::non_monotone;
      res.cls.crossings = std::max(1, crossings);
      return res;
    }
    case EventKind::escaped:
      res.cls = unresolved("escaped");
      return res;
    case EventKind::step_floor:
      res.cls = unresolved("step_floor");
      return res;
  }
  res.cls = unresolved("unknown_terminal");
  return res;
}

BisectionResult eps_min(const WaveProblem& problem, double delta, double tol) {
  return eps_min(problem, delta, tol, BisectOptions{});
}

BisectionResult eps_min(const WaveProblem& problem, double delta, double tol,
                        const BisectOptions& options) {
  if (!(delta > 0.0)) domain_fail("zero_delta", "delta must be > 0");
  if (!(tol > 0.0)) domain_fail("bad_tol", "tol must be > 0");

  const double alpha = problem.alpha();
  const double e0 = eps0(problem, delta);

  double lo = e0;
  if (options.use_bound_bracket) {
    const BoundsReport br = bounds_report(problem, alpha, delta);
    // Shave a hair off the numerically computed bounds so rounding can never
    // push the bracket above the true minimum.
    if (br.c_alpha_bound) lo = std::max(lo, *br.c_alpha_bound * (1.0 - 1e-9));
    if (alpha == 0.5) lo = std::max(lo, br.half_alpha_bound * (1.0 - 1e-9));
    if (br.mu_alpha) lo = std::max(lo, *br.mu_alpha * (1.0 - 1e-9));
  }

  ShootOptions sopt = options.shoot;
  sopt.degeneracy_margin = std::max(sopt.degeneracy_margin, 10.0 * tol);

  double hi = std::max(lo, 1.0);
  if (alpha > 0.5) hi = std::max(hi, h_closed_form(problem, alpha));
  if (options.upper_hint) hi = std::max(lo, *options.upper_hint);

  BisectionResult out;
  Classification cls_hi;
  bool bracketed = false;
  for (int d = 0; d <= 20; ++d) {
    const ShootResult s = shoot(problem, delta, hi, sopt);
    ++out.iterations;
    if (s.cls.monotone()) {
      cls_hi = s.cls;
      bracketed = true;
      break;
    }
    lo = hi;
    hi *= 2.0;
  }
  if (!bracketed) {
    std::ostringstream os;
    os << "no monotone shot found up to eps = " << hi
       << " (unresolved shots may be polluting the indicator)";
    domain_fail("bracket_failure", os.str());
  }

  if (hi <= lo) {
    // The first probe at the analytic lower bracket was already monotone.
    out.eps_min = hi;
    out.bracket = {lo - tol * std::max(1.0, lo), hi};
    out.entry_at_min = cls_hi;
    return out;
  }

  while (hi - lo > tol * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    const ShootResult s = shoot(problem, delta, mid, sopt);
    ++out.iterations;
    if (s.cls.monotone()) {
      hi = mid;
      cls_hi = s.cls;
    } else {
      lo = mid;
    }
  }

  out.eps_min = hi;
  out.bracket = {lo, hi};
  out.entry_at_min = cls_hi;
  return out;
}

namespace {

CurvePoint curve_point_at(const WaveProblem& problem, double delta, double tol,
                          const BisectOptions& options) {
  CurvePoint pt;
  pt.delta = delta;
  pt.eps0 = eps0(problem, delta);
  try {
    const BisectionResult r = eps_min(problem, delta, tol, options);
    pt.eps_min = r.eps_min;
    pt.entry = r.entry_at_min;
    pt.iterations = r.iterations;
  } catch (const DomainError& e) {
    pt.eps_min = std::numeric_limits<double>::quiet_NaN();
    pt.entry.kind = ClassKind::unresolved;
    pt.entry.reason = e.kind();
  }
  return pt;
}

void check_grid(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) domain_fail("bad_grid", "grid deltas must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      domain_fail("bad_grid", "grid must be strictly increasing");
  }
}

}  // namespace

std::vector<CurvePoint> boundary_curve(const WaveProblem& problem,
                                       std::span<const double> delta_grid,
                                       double tol, int workers) {
  check_grid(delta_grid);
  std::vector<CurvePoint> out(delta_grid.size());
  const BisectOptions options{};
  const auto n = static_cast<long>(delta_grid.size());
#ifdef _OPENMP
  const int nthreads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
  for (long i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        curve_point_at(problem, delta_grid[static_cast<std::size_t>(i)], tol, options);
#else
  (void)workers;
  for (long i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] =
        curve_point_at(problem, delta_grid[static_cast<std::size_t>(i)], tol, options);
#endif
  return out;
}

std::vector<CurvePoint> boundary_curve_serial(const WaveProblem& problem,
                                              std::span<const double> delta_grid,
                                              double tol, bool warm_start) {
  check_grid(delta_grid);
  std::vector<CurvePoint> out;
  out.reserve(delta_grid.size());
  BisectOptions options{};
  for (const double delta : delta_grid) {
    if (warm_start && !out.empty() && std::isfinite(out.back().eps_min))
      options.upper_hint = 1.25 * out.back().eps_min;
    out.push_back(curve_point_at(problem, delta, tol, options));
  }
  return out;
}

std::vector<double> make_grid(double a, double b, int n, bool log_spaced) {
  if (!(n >= 2) || !(a < b) || (log_spaced && !(a > 0)))
    domain_fail("bad_grid", "grid needs n >= 2, a < b (and a > 0 when log-spaced)");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    g[static_cast<std::size_t>(i)] =
        log_spaced ? std::exp(std::log(a) + s * (std::log(b) - std::log(a)))
                   : a + s * (b - a);
  }
  g.front() = a;
  g.back() = b;
  return g;
}

}  // namespace rosenau
