#pragma once

#include <stdexcept>
#include <string>

namespace thetablocks {

enum class ErrorKind {
  MalformedInput,
  MalformedPermutation,
  OrderCapExceeded,
  NotNormal,
  DivisionByZero,
  NotAlgebraicInteger,
  ConductorMismatch,
  NoDefectClass,
  DefectMismatch,
  NotLinear,
  ShapeViolation,
  SplitFailure,
  EigenvalueOutsideField,
  NonIntegralSolution,
  RowOutsideBlock,
  NotRealizable,
  IntertwinerRankError,
  NotCosetConstant,
  BijectionFailure,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the engine. The kind is stable and part of the
/// public contract; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace thetablocks
