#pragma once

#include <stdexcept>
#include <string>

namespace collapse {

/// Argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
  public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Request that is well-formed but not supported (wrong regime, wrong gamma class).
class unsupported_error : public std::invalid_argument {
  public:
    explicit unsupported_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// An iterative kernel failed to meet its tolerance within its iteration budget.
class convergence_error : public std::runtime_error {
  public:
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A result left the representable range (reported instead of silently clamped).
class range_error : public std::range_error {
  public:
    explicit range_error(const std::string& msg) : std::range_error(msg) {}
};

}  // namespace collapse
