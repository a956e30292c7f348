#pragma once

#include <stdexcept>
#include <string>

namespace chevdv {

enum class ErrorCode {
  NotUnimodular,
  StabilizationFailed,
  CompletionFailed,
  UnsupportedRing,
  InvalidRank,
  Unsupported,
  RingMismatch,
  NotInClosedSet,
  RootNotInSubsystem,
  NotInvertible,
  NotInLevi,
  AbsorptionFailed,
  PreconditionViolated,
  Overflow,
  Parse,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can report it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chevdv
