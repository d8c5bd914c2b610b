#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phq {

enum class ErrorKind {
  DimensionMismatch,
  NotSymmetric,
  OddDimension,
  InvalidStructure,
  InvalidDerivation,
  InvalidExtensionData,
  InvalidCocycle,
  InvalidAlgebraData,
  InvalidParameter,
  NotDefinitePlane,
  InvalidCentralElement,
  NonIsotropic,
  EmptyIntersection,
  ReductionStuck,
  HypothesisViolated,
  NotNilpotent,
  UnknownLabel,
  DimensionTooLarge,
  UnclassifiedFingerprint,
  ParseError,
  IndexOutOfRange,
  BadRational,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace phq
