#pragma once

#include <stdexcept>
#include <string>

namespace phasebound {

/// Raised when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised by envelope inversion when the requested phase value lies below the
/// invertible range of the envelope. Callers turn this into NOT_APPLICABLE.
class TargetBelowRange : public std::range_error {
 public:
  explicit TargetBelowRange(const std::string& what) : std::range_error(what) {}
};

/// Raised by the numeric Liouville potential when the estimated first
/// derivative is not positive.
class DegenerateDerivative : public std::runtime_error {
 public:
  explicit DegenerateDerivative(const std::string& what) : std::runtime_error(what) {}
};

/// Raised where a computation needs oracle values outside the accuracy envelope.
class AccuracyDegraded : public std::runtime_error {
 public:
  explicit AccuracyDegraded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace phasebound
