#include "thetablocks/error.hpp"

namespace thetablocks {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotAlgebraicInteger: return "NotAlgebraicInteger";
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::NoDefectClass: return "NoDefectClass";
    case ErrorKind::DefectMismatch: return "DefectMismatch";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::SplitFailure: return "SplitFailure";
    case ErrorKind::EigenvalueOutsideField: return "EigenvalueOutsideField";
    case ErrorKind::NonIntegralSolution: return "NonIntegralSolution";
    case ErrorKind::RowOutsideBlock: return "RowOutsideBlock";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::IntertwinerRankError: return "IntertwinerRankError";
    case ErrorKind::NotCosetConstant: return "NotCosetConstant";
    case ErrorKind::BijectionFailure: return "BijectionFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace thetablocks
