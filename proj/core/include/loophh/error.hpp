#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loophh {

enum class ErrorCode {
  DivisionByZero,
  IncompatibleCyclotomicOrders,
  OrderOutOfBounds,
  NotASubspace,
  SpaceMismatch,
  DimensionMismatch,
  NotClosedWithinBound,
  NonInvertibleGenerator,
  NonUnitary,
  NotDiagonal,
  ResonantWeight,
  SizeGuardExceeded,
  NotASingularPoint,
  ParseError,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IncompatibleCyclotomicOrders: return "IncompatibleCyclotomicOrders";
    case ErrorCode::OrderOutOfBounds: return "OrderOutOfBounds";
    case ErrorCode::NotASubspace: return "NotASubspace";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotClosedWithinBound: return "NotClosedWithinBound";
    case ErrorCode::NonInvertibleGenerator: return "NonInvertibleGenerator";
    case ErrorCode::NonUnitary: return "NonUnitary";
    case ErrorCode::NotDiagonal: return "NotDiagonal";
    case ErrorCode::ResonantWeight: return "ResonantWeight";
    case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::NotASingularPoint: return "NotASingularPoint";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace loophh
