#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace singk {

enum class ErrorCode {
  // exact arithmetic
  NotRational,
  NotIntegral,
  ConductorMismatch,
  DivisionByZero,
  // group enumeration
  OrderExceeded,
  NonInvertibleGenerator,
  NotNormal,
  // characters and representation ring
  GroupMismatch,
  DegreeOutOfRange,
  NonExactDivision,
  AlgorithmFailure,
  NotVirtualCharacter,
  TableMismatch,
  // integer lattices
  FactorizationTooLarge,
  // pipelines and tables
  NotFreeAction,
  NotCoprime,
  NotPairwiseCoprime,
  InvalidLabel,
  DimensionMismatch,
  // input handling
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that signal broken internal invariants rather than bad input.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace singk
