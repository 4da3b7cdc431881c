#include "stringex/error.hpp"

namespace stringex {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotGeneralizedCartan: return "NotGeneralizedCartan";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorCode::UnknownString: return "UnknownString";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::SymmetrizerCheckFailed: return "SymmetrizerCheckFailed";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::NotAQuadrilateral: return "NotAQuadrilateral";
    case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::NotSameShuffleClass: return "NotSameShuffleClass";
    case ErrorCode::ReductionNotApplicable: return "ReductionNotApplicable";
    case ErrorCode::LevelEmpty: return "LevelEmpty";
    case ErrorCode::InternalLemmaViolation: return "InternalLemmaViolation";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::SignCoherenceViolation: return "SignCoherenceViolation";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace stringex
