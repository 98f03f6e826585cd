#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace lefschetz {

enum class ErrorKind {
  NonSquarefree,
  DidNotConverge,
  ConditionViolation,
  NotMorse,
  NotRegularValue,
  UnmatchedPoint,
  UnknownCriticalValue,
  ClearanceViolation,
  TrackingLoss,
  RootCollision,
  InconsistentTable,
  NonUnimodularGenerator,
  NotDirectSum,
  NotTransversal,
  NonConstantCoefficient,
  DegreeViolation,
  InvalidFactorization,
  BadPartition,
  PrimeInput,
  DecompositionFailure,
  InvalidInput,
  Internal,
};

const char* errorKindName(ErrorKind kind);

// Validation errors map to CLI exit code 1, inconsistencies to 2.
bool isValidationError(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        nlohmann::json detail = nlohmann::json::object());

  ErrorKind kind() const { return kind_; }
  const nlohmann::json& detail() const { return detail_; }
  nlohmann::json toJson() const;

 private:
  ErrorKind kind_;
  nlohmann::json detail_;
};

}  // namespace lefschetz
