#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rosenau {

/// Domain-level failure carrying a stable machine-readable kind tag
/// (e.g. "non_convex_flux", "bad_interval", "alpha_below_half").
class DomainError : public std::runtime_error {
public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void domain_fail(std::string kind, const std::string& what) {
  throw DomainError(std::move(kind), what);
}

}  // namespace rosenau
