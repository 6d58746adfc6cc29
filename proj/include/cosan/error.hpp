#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace cosan {

enum class ErrorKind {
  CodMismatch,
  DomMismatch,
  NotEpi,
  NotInjective,
  NotSurjective,
  OutOfWindow,
  LevelMismatch,
  LevelUnavailable,
  IllTyped,
  NonCommuting,
  IndexOutOfRange,
  NotNatural,
  NonSemicartesian,
  RoundTripMismatch,
  ResourceBound,
  Malformed,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure carries a kind and, where one exists, a concrete
/// JSON witness (a function literal, a level, an element).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, nlohmann::json witness = nullptr);

  ErrorKind kind() const noexcept { return kind_; }
  const nlohmann::json& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  nlohmann::json witness_;
};

}  // namespace cosan
