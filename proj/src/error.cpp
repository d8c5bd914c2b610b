#include "phq/error.hpp"

namespace phq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::InvalidStructure: return "InvalidStructure";
    case ErrorKind::InvalidDerivation: return "InvalidDerivation";
    case ErrorKind::InvalidExtensionData: return "InvalidExtensionData";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::InvalidAlgebraData: return "InvalidAlgebraData";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotDefinitePlane: return "NotDefinitePlane";
    case ErrorKind::InvalidCentralElement: return "InvalidCentralElement";
    case ErrorKind::NonIsotropic: return "NonIsotropic";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::ReductionStuck: return "ReductionStuck";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::UnclassifiedFingerprint: return "UnclassifiedFingerprint";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadRational: return "BadRational";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace phq
