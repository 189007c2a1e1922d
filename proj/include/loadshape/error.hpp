#pragma once

#include <stdexcept>
#include <string>

namespace loadshape {

enum class ErrorCode {
  WrongLength,
  NegativeValue,
  NonFinite,
  AllZero,
  NotADivisor,
  LengthMismatch,
  TooShort,
  TooLong,
  KTooLarge,
  EmptyInput,
  SingleCurve,
  InsufficientHistory,
  AllZeroSlice,
  NoHistory,
  ZeroActual,
  ShapeMismatch,
  AssumptionViolated,
  NoConvergence,
  ZeroDenominator,
  ScheduleOverflow,
  InvalidArgument,
  IoError,
};

const char* to_string(ErrorCode code);

// All recoverable failures in the library surface as this exception.
// `code` identifies the violated contract; `what()` carries context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::TooLong: return "TooLong";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SingleCurve: return "SingleCurve";
    case ErrorCode::InsufficientHistory: return "InsufficientHistory";
    case ErrorCode::AllZeroSlice: return "AllZeroSlice";
    case ErrorCode::NoHistory: return "NoHistory";
    case ErrorCode::ZeroActual: return "ZeroActual";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ScheduleOverflow: return "ScheduleOverflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace loadshape
