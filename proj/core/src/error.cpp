#include "singk/error.hpp"

namespace singk {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::NonInvertibleGenerator: return "NonInvertibleGenerator";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NonExactDivision: return "NonExactDivision";
    case ErrorCode::AlgorithmFailure: return "AlgorithmFailure";
    case ErrorCode::NotVirtualCharacter: return "NotVirtualCharacter";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::FactorizationTooLarge: return "FactorizationTooLarge";
    case ErrorCode::NotFreeAction: return "NotFreeAction";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ConductorMismatch:
    case ErrorCode::NonExactDivision:
    case ErrorCode::AlgorithmFailure:
    case ErrorCode::NotVirtualCharacter:
    case ErrorCode::TableMismatch:
      return true;
    default:
      return false;
  }
}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace singk
