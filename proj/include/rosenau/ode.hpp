#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rosenau/problem.hpp"

namespace rosenau {

struct PhaseState {
  double v = 0;
  double w = 0;  // w = v' in the wave variable
};

/// Tolerances and stopping data for the phase-plane integrator.
/// Defaults: the system is fast-slow for small delta, so tolerances are tight
/// and a step floor turns stiffness into a reported event instead of a stall.
struct IntegratorConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-10;
  long max_steps = 2'000'000;
  double t_max = 1e5;
  double r_stop = 1e-6;    // capture radius at (u+, 0); see defaults_for
  double min_step = 1e-13;

  static IntegratorConfig defaults_for(const WaveProblem& problem);
};

enum class EventKind {
  crossed_v_plus,        // v crossed u+ heading down (overshoot)
  crossed_w_zero,        // w crossed 0 upward with v still above u+
  entered_capture_ball,  // distance to (u+, 0) fell below r_stop
  escaped,               // |v| or |w| exceeded the escape radius
  step_floor,            // controller demanded a step below min_step
};

const char* to_string(EventKind kind);

struct OrbitEvent {
  EventKind kind;
  double t;
  PhaseState state;
};

/// Time-parameterised trajectory. Samples are the accepted step endpoints
/// plus the located event state; integration stops at the first event, so
/// `events` holds at most the terminal one.
struct Orbit {
  std::vector<double> t;
  std::vector<PhaseState> y;
  std::vector<OrbitEvent> events;

  std::size_t size() const noexcept { return t.size(); }
  const OrbitEvent* terminal() const noexcept {
    return events.empty() ? nullptr : &events.back();
  }
  double min_w() const noexcept;
  double max_w() const noexcept;
};

/// Right side of the first-order system
///   v' = w,   w' = (1/delta) [ -eps w/(1+w^2)^alpha + g(v) ].
/// Requires delta > 0 ("zero_delta").
std::pair<double, double> vector_field(const WaveProblem& problem, double delta,
                                       double epsilon, PhaseState state);

/// Adaptive Dormand-Prince 5(4) with dense output. Advances from `start`
/// until the first of: capture at (u+,0), a gated v- or w-crossing, escape,
/// t_max, or the step floor. Events are located by sign-change bisection on
/// the dense output. Throws "non_finite_state" if the state stops being
/// representable; the step floor is an event, not a failure.
Orbit integrate(const WaveProblem& problem, double delta, double epsilon,
                PhaseState start, const IntegratorConfig& config);

}  // namespace rosenau
