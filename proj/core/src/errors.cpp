#include "chevdv/errors.hpp"

namespace chevdv {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::StabilizationFailed: return "StabilizationFailed";
    case ErrorCode::CompletionFailed: return "CompletionFailed";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotInClosedSet: return "NotInClosedSet";
    case ErrorCode::RootNotInSubsystem: return "RootNotInSubsystem";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotInLevi: return "NotInLevi";
    case ErrorCode::AbsorptionFailed: return "AbsorptionFailed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace chevdv
