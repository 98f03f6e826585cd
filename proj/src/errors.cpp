#include "lefschetz/errors.hpp"

namespace lefschetz {

const char* errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquarefree: return "NonSquarefree";
    case ErrorKind::DidNotConverge: return "DidNotConverge";
    case ErrorKind::ConditionViolation: return "ConditionViolation";
    case ErrorKind::NotMorse: return "NotMorse";
    case ErrorKind::NotRegularValue: return "NotRegularValue";
    case ErrorKind::UnmatchedPoint: return "UnmatchedPoint";
    case ErrorKind::UnknownCriticalValue: return "UnknownCriticalValue";
    case ErrorKind::ClearanceViolation: return "ClearanceViolation";
    case ErrorKind::TrackingLoss: return "TrackingLoss";
    case ErrorKind::RootCollision: return "RootCollision";
    case ErrorKind::InconsistentTable: return "InconsistentTable";
    case ErrorKind::NonUnimodularGenerator: return "NonUnimodularGenerator";
    case ErrorKind::NotDirectSum: return "NotDirectSum";
    case ErrorKind::NotTransversal: return "NotTransversal";
    case ErrorKind::NonConstantCoefficient: return "NonConstantCoefficient";
    case ErrorKind::DegreeViolation: return "DegreeViolation";
    case ErrorKind::InvalidFactorization: return "InvalidFactorization";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::PrimeInput: return "PrimeInput";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

bool isValidationError(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InconsistentTable:
    case ErrorKind::DecompositionFailure:
    case ErrorKind::NonConstantCoefficient:
    case ErrorKind::Internal:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorKind kind, const std::string& message, nlohmann::json detail)
    : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

nlohmann::json Error::toJson() const {
  return {{"error", errorKindName(kind_)}, {"message", what()}, {"detail", detail_}};
}

}  // namespace lefschetz
