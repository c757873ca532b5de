#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace energy_series {

enum class ErrorCode {
  InvalidSpec,
  NonDecayingSolution,
  TailToleranceUnmet,
  ProfileSingularity,
  InsufficientOrder,
  NoPositiveCoefficients,
  DegenerateSequence,
  TooShort,
  SingularPadeSystem,
  BrokenRegime,
  NoRealRoot,
  PoleProximity,
  NotConverged,
  NoBracket,
  Usage,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace energy_series
