#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liefix {

/// Failure categories surfaced by every module. The CLI maps these onto exit
/// codes, so new kinds need a matching entry in cli/run.cpp.
enum class ErrorKind {
  Parse,
  Conductor,
  DivisionByZero,
  DimensionMismatch,
  SingularMatrix,
  NotNilpotent,
  NotSimilar,
  SamplingExhausted,
  JacobiViolation,
  NotSolvable,
  SplitFailure,
  NotAlmostAbelian,
  SingularInput,
  PreconditionViolated,
  NotFiliform,
  AdaptationFailed,
  NoNonsingularDerivation,
  NotDiagonalizableHere,
  UnknownName,
  BadParameters,
  ResourceLimit,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liefix
