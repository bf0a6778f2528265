#pragma once

#include <stdexcept>
#include <string>

namespace oscex {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid mathematical input (wrong sign, inconsistent dimensions, non-finite values).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure during a computation (resonance, singularity, non-convergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A step size hit a resonance of the problem (sin(w*eps) = 0 or 1 + cos(w*eps) = 0).
class ResonantStepError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A forcing frequency coincides with a natural frequency of the system.
class ResonantForcingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Linear solve on a singular or numerically singular matrix.
class SingularMatrixError : public NumericalError {
 public:
  SingularMatrixError(const std::string& what, double condition)
      : NumericalError(what), condition_(condition) {}
  /// 1-norm condition estimate at the point of failure (inf for an exact zero pivot).
  double condition() const { return condition_; }

 private:
  double condition_;
};

/// Iteration cap reached before the requested residual.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Bad run configuration (unknown stepper, incompatible problem, malformed JSON).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File or stream failure, with path context in the message.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace oscex
