#pragma once

#include <stdexcept>
#include <string>

namespace rplane {

/// Input outside the mathematical domain of an operation (Im z <= 0, det != 1,
/// gcd(a,c) != 1, missing Inv level, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A transform that would leave the closed-form atom class.  Raised instead of
/// silently approximating.
class UnimplementedError : public std::logic_error {
 public:
  explicit UnimplementedError(const std::string& what) : std::logic_error(what) {}
};

/// A q-series operation needs more coefficients than the input carries.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad command-line arguments or configuration values.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rplane
