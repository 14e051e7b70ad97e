#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leemodel {

enum class ErrorCode {
  NonPositiveMass,
  NegativeCoupling,
  NonPositiveCutoff,
  InvalidArgument,
  DivergentIntegral,
  QuadratureFailure,
  InvalidBoundState,
  OnShellSingularity,
  NoRoot,
  OutOfRange,
  NonPositiveU0,
  DegenerateGrid,
  DeltaLimitUnsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

// Input-validation failures, as opposed to failures of a numerical method
// on valid input. The CLI maps the former to exit 2 and the latter to 3.
constexpr bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveMass:
    case ErrorCode::NegativeCoupling:
    case ErrorCode::NonPositiveCutoff:
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidBoundState:
    case ErrorCode::OutOfRange:
    case ErrorCode::NonPositiveU0:
      return true;
    default:
      return false;
  }
}

class LeeError : public std::runtime_error {
 public:
  LeeError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace leemodel
