#include "liefix/errors.hpp"

namespace liefix {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Conductor: return "ConductorError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::NotSimilar: return "NotSimilar";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::SplitFailure: return "SplitFailure";
    case ErrorKind::NotAlmostAbelian: return "NotAlmostAbelian";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotFiliform: return "NotFiliform";
    case ErrorKind::AdaptationFailed: return "AdaptationFailed";
    case ErrorKind::NoNonsingularDerivation: return "NoNonsingularDerivation";
    case ErrorKind::NotDiagonalizableHere: return "NotDiagonalizableHere";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

}  // namespace liefix
