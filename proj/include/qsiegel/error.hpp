#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsiegel {

enum class ErrorCode {
  DimensionMismatch,
  Singular,
  DomainError,
  EigSolverFailure,
  NotIdempotent,
  InvalidAlgebra,
  InvalidRepresentation,
  NotInDomain,
  NotALinearSpace,
  NotInLambda,
  DecompositionFailure,
  NotInCone,
  MCVarianceTooHigh,
  QuadratureFailure,
  NotPSD,
  FrameInvalid,
  FactorizationResidualTooLarge,
  HypothesisViolated,
  NotPositiveDefinite,
  UnknownEntry,
  SpecError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by inversion when P(x) is numerically singular.
class SingularError : public Error {
 public:
  SingularError(const std::string& what, double smallest_singular_value)
      : Error(ErrorCode::Singular, what),
        smallest_singular_value_(smallest_singular_value) {}

  double smallest_singular_value() const noexcept {
    return smallest_singular_value_;
  }

 private:
  double smallest_singular_value_;
};

}  // namespace qsiegel
