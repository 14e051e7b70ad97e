#include "leemodel/errors.hpp"

namespace leemodel {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveMass: return "NonPositiveMass";
    case ErrorCode::NegativeCoupling: return "NegativeCoupling";
    case ErrorCode::NonPositiveCutoff: return "NonPositiveCutoff";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivergentIntegral: return "DivergentIntegral";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::InvalidBoundState: return "InvalidBoundState";
    case ErrorCode::OnShellSingularity: return "OnShellSingularity";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NonPositiveU0: return "NonPositiveU0";
    case ErrorCode::DegenerateGrid: return "DegenerateGrid";
    case ErrorCode::DeltaLimitUnsupported: return "DeltaLimitUnsupported";
  }
  return "Unknown";
}

}  // namespace leemodel
