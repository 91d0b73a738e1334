#include "qsiegel/error.hpp"

namespace qsiegel {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EigSolverFailure: return "EigSolverFailure";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::NotALinearSpace: return "NotALinearSpace";
    case ErrorCode::NotInLambda: return "NotInLambda";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::NotInCone: return "NotInCone";
    case ErrorCode::MCVarianceTooHigh: return "MCVarianceTooHigh";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::FrameInvalid: return "FrameInvalid";
    case ErrorCode::FactorizationResidualTooLarge: return "FactorizationResidualTooLarge";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::SpecError: return "SpecError";
  }
  return "Unknown";
}

}  // namespace qsiegel
