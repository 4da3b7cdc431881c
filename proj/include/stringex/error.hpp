#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stringex {

enum class ErrorCode {
  NotGeneralizedCartan,
  NotSymmetrizable,
  LengthMismatch,
  LetterOutOfRange,
  UnknownString,
  UnknownVertex,
  IntegralityViolation,
  SymmetrizerCheckFailed,
  EntryOutOfRange,
  NotSkewSymmetric,
  NotAQuadrilateral,
  PositionOutOfRange,
  NotSameShuffleClass,
  ReductionNotApplicable,
  LevelEmpty,
  InternalLemmaViolation,
  DepthExceeded,
  InstanceTooLarge,
  SignCoherenceViolation,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a machine-readable code. Everything the library
/// rejects is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace stringex
