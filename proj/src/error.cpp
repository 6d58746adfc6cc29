#include "cosan/error.hpp"

namespace cosan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CodMismatch: return "CodMismatch";
    case ErrorKind::DomMismatch: return "DomMismatch";
    case ErrorKind::NotEpi: return "NotEpi";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::OutOfWindow: return "OutOfWindow";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::LevelUnavailable: return "LevelUnavailable";
    case ErrorKind::IllTyped: return "IllTyped";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotNatural: return "NotNatural";
    case ErrorKind::NonSemicartesian: return "NonSemicartesian";
    case ErrorKind::RoundTripMismatch: return "RoundTripMismatch";
    case ErrorKind::ResourceBound: return "ResourceBound";
    case ErrorKind::Malformed: return "Malformed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, nlohmann::json witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace cosan
