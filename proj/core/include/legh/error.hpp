#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace legh {

enum class ErrorCode {
  AllZero,
  ArityMismatch,
  BadLambda,
  LambdaMismatch,
  NonConvergence,
  DomainError,
  PoleError,
  LowImaginaryPart,
  NoConvergence,
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable error code. All library failures
/// surface as `legh::Error`; callers switch on `code()`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::LambdaMismatch: return "LambdaMismatch";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::PoleError: return "PoleError";
    case ErrorCode::LowImaginaryPart: return "LowImaginaryPart";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace legh
