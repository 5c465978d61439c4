#include "qnb/error.hpp"

namespace qnb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateSite: return "DuplicateSite";
    case ErrorKind::InvalidAlphabet: return "InvalidAlphabet";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::RingTooSmall: return "RingTooSmall";
    case ErrorKind::MinimalityViolation: return "MinimalityViolation";
    case ErrorKind::ProtocolPreconditionFailed: return "ProtocolPreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace qnb
