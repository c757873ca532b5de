#include "energy_series/errors.hpp"

namespace energy_series {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::NonDecayingSolution: return "NonDecayingSolution";
    case ErrorCode::TailToleranceUnmet: return "TailToleranceUnmet";
    case ErrorCode::ProfileSingularity: return "ProfileSingularity";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::NoPositiveCoefficients: return "NoPositiveCoefficients";
    case ErrorCode::DegenerateSequence: return "DegenerateSequence";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::SingularPadeSystem: return "SingularPadeSystem";
    case ErrorCode::BrokenRegime: return "BrokenRegime";
    case ErrorCode::NoRealRoot: return "NoRealRoot";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::Usage: return "UsageError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace energy_series
