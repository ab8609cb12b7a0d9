#pragma once

// Shared test fixtures. reference_shoot is a deliberately plain fixed-step
// RK4 shooter for the Burgers [0,2] instance, kept independent of the library
// integrator and event machinery so it can act as an oracle for shot
// classifications.

#include <algorithm>
#include <cmath>
#include <vector>

#include "rosenau/problem.hpp"

namespace testsupport {

inline rosenau::WaveProblem reference_problem(double alpha) {
  return rosenau::WaveProblem::validate(rosenau::FluxSpec::burgers(), 2.0, 0.0,
                                        alpha);
}

enum class RefOutcome { captured, crossed, timeout, blown };

struct RefShot {
  RefOutcome outcome = RefOutcome::timeout;
  double min_w = 0;
  double w_at_crossing = 0;
  double t_end = 0;
};

// Classic RK4 with its own field, launch direction and event checks.
inline RefShot reference_shoot(double alpha, double delta, double epsilon,
                               double h, double t_max) {
  auto g = [](double v) { return 0.5 * v * (v - 2.0); };  // Burgers [0,2], lambda = 1
  auto fw = [&](double v, double w) {
    return (g(v) - epsilon * w / std::pow(1.0 + w * w, alpha)) / delta;
  };

  // Unstable eigendirection of the saddle at (2, 0); g'(2) = 1.
  const double theta =
      2.0 / (epsilon + std::sqrt(epsilon * epsilon + 4.0 * delta));
  const double nrm = std::hypot(1.0, theta);
  const double off = 2e-7;
  double v = 2.0 - off / nrm;
  double w = -off * theta / nrm;

  RefShot out;
  out.min_w = w;
  const double r_stop = 2e-6;
  for (double t = 0.0; t < t_max; t += h) {
    const double k1v = w, k1w = fw(v, w);
    const double k2v = w + 0.5 * h * k1w, k2w = fw(v + 0.5 * h * k1v, w + 0.5 * h * k1w);
    const double k3v = w + 0.5 * h * k2w, k3w = fw(v + 0.5 * h * k2v, w + 0.5 * h * k2w);
    const double k4v = w + h * k3w, k4w = fw(v + h * k3v, w + h * k3w);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    out.min_w = std::min(out.min_w, w);
    out.t_end = t + h;
    if (v * v + w * w < r_stop * r_stop) {
      out.outcome = RefOutcome::captured;
      return out;
    }
    if (v < 0.0 && w < -1e-9) {
      out.outcome = RefOutcome::crossed;
      out.w_at_crossing = w;
      return out;
    }
    if (std::abs(v) > 2000.0 || std::abs(w) > 2000.0) {
      out.outcome = RefOutcome::blown;
      return out;
    }
  }
  return out;
}

// Piecewise-linear w(v) read off an orbit whose v decreases monotonically.
inline double w_of_v(const std::vector<double>& v, const std::vector<double>& w,
                     double vq) {
  // v is decreasing; find the segment containing vq.
  for (std::size_t i = 1; i < v.size(); ++i) {
    if ((v[i - 1] >= vq && vq >= v[i])) {
      const double s = (vq - v[i - 1]) / (v[i] - v[i - 1]);
      return w[i - 1] + s * (w[i] - w[i - 1]);
    }
  }
  return w.back();
}

}  // namespace testsupport
