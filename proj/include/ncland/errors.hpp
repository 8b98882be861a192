#pragma once

#include <stdexcept>
#include <string>

namespace ncland {

/// Invalid argument outside a routine's documented domain.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when e*B*theta hits 1: the effective mass vanishes and every
/// derived quantity (omega*, Theta) diverges.
class CriticalPointError : public std::domain_error {
 public:
  explicit CriticalPointError(const std::string& what) : std::domain_error(what) {}
};

/// The truncated basis cannot hold the requested state within tolerance.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite values or failed convergence inside a numeric kernel.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Gaussian kernel composition hit a zero denominator (Lambda = 0).
class SingularCompositionError : public std::runtime_error {
 public:
  explicit SingularCompositionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ncland
