#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sasaki {

enum class ErrorCode {
  Malformed,
  TooLarge,
  BaseMismatch,
  // measurements
  EmptyMeasurement,
  ContainsBot,
  NotPairwiseOrthogonal,
  JoinNotTop,
  NotFiner,
  NotComparable,
  // constructors
  InvalidDiagram,
  PastingNotOrthomodular,
  // descriptions / filters
  InvalidDescription,
  ImproperFilter,
  NotAFilter,
  // subspaces
  DimMismatch,
  DimTooSmall,
  PrecondViolated,
  ZeroVector,
  ParseError,
  // cli
  UnknownCheck,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sasaki
