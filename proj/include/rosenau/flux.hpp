#pragma once

#include <vector>

namespace rosenau {

/// Strictly convex scalar flux. Either the builtin Burgers flux f(u) = u^2/2
/// or a polynomial given by ascending-power coefficients (degree >= 2).
/// Convexity is checked when a WaveProblem is validated, not here.
class FluxSpec {
public:
  static FluxSpec burgers();
  static FluxSpec polynomial(std::vector<double> coeffs);

  double f(double u) const;
  double df(double u) const;
  double d2f(double u) const;

  bool is_burgers() const noexcept { return burgers_; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

private:
  FluxSpec(bool burgers, std::vector<double> coeffs);

  bool burgers_ = false;
  std::vector<double> coeffs_;    // ascending powers
  std::vector<double> dcoeffs_;
  std::vector<double> d2coeffs_;
};

}  // namespace rosenau
