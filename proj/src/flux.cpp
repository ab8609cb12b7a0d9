#include "rosenau/flux.hpp"

#include "internal.hpp"

namespace rosenau {

FluxSpec::FluxSpec(bool burgers, std::vector<double> coeffs)
    : burgers_(burgers), coeffs_(std::move(coeffs)) {
  dcoeffs_ = detail::poly_derivative(coeffs_);
  d2coeffs_ = detail::poly_derivative(dcoeffs_);
}

FluxSpec FluxSpec::burgers() { return FluxSpec(true, {0.0, 0.0, 0.5}); }

FluxSpec FluxSpec::polynomial(std::vector<double> coeffs) {
  return FluxSpec(false, std::move(coeffs));
}

double FluxSpec::f(double u) const {
  if (burgers_) return 0.5 * u * u;
  return detail::poly_eval(coeffs_, u);
}

double FluxSpec::df(double u) const {
  if (burgers_) return u;
  return detail::poly_eval(dcoeffs_, u);
}

double FluxSpec::d2f(double u) const {
  if (burgers_) return 1.0;
  return detail::poly_eval(d2coeffs_, u);
}

}  // namespace rosenau
