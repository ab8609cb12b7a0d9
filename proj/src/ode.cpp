#include "rosenau/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "rosenau/errors.hpp"

namespace rosenau {

namespace {

using Vec2 = std::array<double, 2>;

// (1 + w^2)^alpha with the workhorse exponents special-cased.
inline double response_denom(double w2, double alpha) {
  if (alpha == 0.0) return 1.0;
  if (alpha == 0.5) return std::sqrt(1.0 + w2);
  if (alpha == 1.0) return 1.0 + w2;
  if (alpha == 2.0) {
    const double q = 1.0 + w2;
    return q * q;
  }
  return std::pow(1.0 + w2, alpha);
}

// Dormand-Prince 5(4).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Coefficients of the quartic continuous extension.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

struct Dense {
  double t0 = 0, h = 0;
  Vec2 r1{}, r2{}, r3{}, r4{}, r5{};

  Vec2 eval(double theta) const {
    const double th1 = 1.0 - theta;
    Vec2 y;
    for (int i = 0; i < 2; ++i)
      y[i] = r1[i] + theta * (r2[i] + th1 * (r3[i] + theta * (r4[i] + th1 * r5[i])));
    return y;
  }
};

struct EventProbe {
  EventKind kind;
  double t;
  Vec2 y;
};

}  // namespace

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::crossed_v_plus: return "crossed_v_plus";
    case EventKind::crossed_w_zero: return "crossed_w_zero";
    case EventKind::entered_capture_ball: return "entered_capture_ball";
    case EventKind::escaped: return "escaped";
    case EventKind::step_floor: return "step_floor";
  }
  return "unknown";
}

IntegratorConfig IntegratorConfig::defaults_for(const WaveProblem& problem) {
  IntegratorConfig c;
  c.r_stop = 1e-6 * problem.width();
  return c;
}

double Orbit::min_w() const noexcept {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : y) m = std::min(m, s.w);
  return m;
}

double Orbit::max_w() const noexcept {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& s : y) m = std::max(m, s.w);
  return m;
}

std::pair<double, double> vector_field(const WaveProblem& problem, double delta,
                                       double epsilon, PhaseState state) {
  if (!(delta > 0.0)) domain_fail("zero_delta", "delta must be > 0");
  const double den = response_denom(state.w * state.w, problem.alpha());
  return {state.w,
          (problem.g_unchecked(state.v) - epsilon * state.w / den) / delta};
}

Orbit integrate(const WaveProblem& problem, double delta, double epsilon,
                PhaseState start, const IntegratorConfig& cfg) {
  if (!(delta > 0.0)) domain_fail("zero_delta", "delta must be > 0");
  if (!(cfg.rel_tol > 0 && cfg.abs_tol > 0 && cfg.t_max > 0 && cfg.r_stop > 0 &&
        cfg.min_step > 0 && cfg.max_steps > 0))
    domain_fail("bad_config", "integrator config fields must be positive");
  if (!(cfg.r_stop < problem.width() / 100.0))
    domain_fail("bad_config", "r_stop must be below (u_minus - u_plus)/100");
  if (!std::isfinite(start.v) || !std::isfinite(start.w))
    domain_fail("non_finite_state", "start state is not finite");

  const double alpha = problem.alpha();
  const double up = problem.u_plus();
  const double escape =
      1e3 * std::max({std::abs(problem.u_minus()), std::abs(up), 1.0});
  const double r_stop2 = cfg.r_stop * cfg.r_stop;

  auto field = [&](const Vec2& y) -> Vec2 {
    const double den = response_denom(y[1] * y[1], alpha);
    return {y[1], (problem.g_unchecked(y[0]) - epsilon * y[1] / den) / delta};
  };

  // Event residuals. Ball and escape are radius tests, the crossings are
  // directed sign changes gated at the located point.
  auto f_vplus = [&](const Vec2& y) { return y[0] - up; };
  auto f_wzero = [&](const Vec2& y) { return y[1]; };
  auto f_ball = [&](const Vec2& y) {
    const double dv = y[0] - up;
    return dv * dv + y[1] * y[1] - r_stop2;
  };
  auto f_escape = [&](const Vec2& y) {
    return std::max(std::abs(y[0]), std::abs(y[1])) - escape;
  };

  Orbit orbit;
  Vec2 y{start.v, start.w};
  double t = 0.0;
  orbit.t.push_back(t);
  orbit.y.push_back({y[0], y[1]});

  // Conditions already met at the start are events at t = 0.
  if (f_ball(y) < 0) {
    orbit.events.push_back({EventKind::entered_capture_ball, 0.0, {y[0], y[1]}});
    return orbit;
  }
  if (f_escape(y) > 0) {
    orbit.events.push_back({EventKind::escaped, 0.0, {y[0], y[1]}});
    return orbit;
  }

  Vec2 k1 = field(y);
  if (std::max(std::abs(k1[0]), std::abs(k1[1])) <= cfg.abs_tol)
    return orbit;  // started at a rest point

  // Initial step from the local derivative scale.
  double h;
  {
    const double sc0 = cfg.abs_tol + cfg.rel_tol * std::abs(y[0]);
    const double sc1 = cfg.abs_tol + cfg.rel_tol * std::abs(y[1]);
    const double d0 = std::hypot(y[0] / sc0, y[1] / sc1);
    const double d1 = std::hypot(k1[0] / sc0, k1[1] / sc1);
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::clamp(h, cfg.min_step * 10, 1.0);
  }

  Vec2 k2, k3, k4, k5, k6, k7;
  for (long step = 0; step < cfg.max_steps; ++step) {
    if (cfg.t_max - t <= cfg.min_step) break;
    if (h < cfg.min_step) {
      orbit.events.push_back({EventKind::step_floor, t, {y[0], y[1]}});
      return orbit;
    }
    h = std::min(h, cfg.t_max - t);

    Vec2 yt;
    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * a21 * k1[i];
    k2 = field(yt);
    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = field(yt);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = field(yt);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = field(yt);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] +
              h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    k6 = field(yt);
    Vec2 ynew;
    for (int i = 0; i < 2; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                            b6 * k6[i]);
    k7 = field(ynew);

    double err = 0;
    for (int i = 0; i < 2; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
      const double sc =
          cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (ei / sc) * (ei / sc);
    }
    err = std::sqrt(0.5 * err);

    if (!std::isfinite(err)) {
      h *= 0.2;
      continue;
    }
    if (err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      continue;
    }

    // Accepted. Build the continuous extension and scan it for events.
    Dense dense;
    dense.t0 = t;
    dense.h = h;
    for (int i = 0; i < 2; ++i) {
      const double ydiff = ynew[i] - y[i];
      const double bspl = h * k1[i] - ydiff;
      dense.r1[i] = y[i];
      dense.r2[i] = ydiff;
      dense.r3[i] = bspl;
      dense.r4[i] = ydiff - h * k7[i] - bspl;
      dense.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                         d6 * k6[i] + d7 * k7[i]);
    }

    constexpr double thetas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    Vec2 ys[5];
    for (int j = 0; j < 5; ++j) ys[j] = dense.eval(thetas[j]);
    ys[0] = y;
    ys[4] = ynew;

    auto locate = [&](auto&& fev, int dir) -> double {
      // First directed sign change among the probe segments, bisected on the
      // dense output; returns theta, or -1 when there is none.
      for (int j = 0; j < 4; ++j) {
        const double fa = fev(ys[j]), fb = fev(ys[j + 1]);
        const bool crossed = (dir < 0) ? (fa > 0.0 && fb <= 0.0)
                                       : (fa < 0.0 && fb >= 0.0);
        if (!crossed) continue;
        double lo = thetas[j], hi = thetas[j + 1];
        for (int it = 0; it < 90 && (hi - lo) * h > 0.0; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = fev(dense.eval(mid));
          const bool left = (dir < 0) ? (fm > 0.0) : (fm < 0.0);
          if (left)
            lo = mid;
          else
            hi = mid;
        }
        return hi;
      }
      return -1.0;
    };

    struct Hit {
      EventKind kind;
      double theta;
    };
    Hit best{EventKind::step_floor, 2.0};
    bool have_hit = false;
    auto consider = [&](EventKind kind, double theta) {
      if (theta < 0) return;
      if (!have_hit || theta < best.theta) {
        best = {kind, theta};
        have_hit = true;
      }
    };

    {
      const double th = locate(f_ball, -1);
      consider(EventKind::entered_capture_ball, th);
    }
    {
      const double th = locate(f_vplus, -1);
      if (th >= 0) {
        const Vec2 ystar = dense.eval(th);
        if (ystar[1] < -cfg.abs_tol) consider(EventKind::crossed_v_plus, th);
      }
    }
    {
      const double th = locate(f_wzero, +1);
      if (th >= 0) {
        const Vec2 ystar = dense.eval(th);
        if (ystar[0] > up + cfg.abs_tol) consider(EventKind::crossed_w_zero, th);
      }
    }
    {
      const double th = locate(f_escape, +1);
      consider(EventKind::escaped, th);
    }

    if (have_hit) {
      const Vec2 ystar = dense.eval(best.theta);
      const double tstar = t + best.theta * h;
      if (tstar > orbit.t.back()) {
        orbit.t.push_back(tstar);
        orbit.y.push_back({ystar[0], ystar[1]});
      }
      orbit.events.push_back({best.kind, tstar, {ystar[0], ystar[1]}});
      return orbit;
    }

    t += h;
    y = ynew;
    k1 = k7;  // FSAL
    if (!std::isfinite(y[0]) || !std::isfinite(y[1]))
      domain_fail("non_finite_state", "state became non-finite during integration");
    orbit.t.push_back(t);
    orbit.y.push_back({y[0], y[1]});

    double grow = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::clamp(grow, 0.2, 5.0);

    // Keep several samples per decade of radius on the final approach so the
    // terminal slope window is resolved.
    {
      const double dv = y[0] - up;
      const double r2 = dv * dv + y[1] * y[1];
      if (r2 < 1600.0 * r_stop2 && r2 > 0) {
        const double drdt = std::abs(dv * y[1] + y[1] * k1[1]);
        if (drdt > 0) {
          const double hcap = 0.55 * r2 / drdt;
          h = std::max(std::min(h, hcap), 10 * cfg.min_step);
        }
      }
    }
  }

  return orbit;  // t_max or max_steps exhausted without a terminal event
}

}  // namespace rosenau
