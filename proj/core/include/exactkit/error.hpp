#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exactkit {

enum class ErrorCode {
  // arithmetic and number theory
  DivisionByZero,
  NonPositiveDivisor,
  ZeroDivisorQuery,
  BothZero,
  ZeroArgument,
  OutOfDomain,
  BadBase,
  NegativeValue,
  UnknownKind,
  // parsing
  ParseError,
  // logic
  UnboundAtom,
  TooManyAtoms,
  // sets, relations, mappings
  MixedAtoms,
  NotASubset,
  TooLarge,
  InconsistentCounts,
  DomainMismatch,
  NotEndorelation,
  NotBijective,
  // finite algebra
  CarrierMismatch,
  // complex numbers
  BadDegree,
  // matrices and systems
  ShapeMismatch,
  NotSquare,
  BadMethod,
  IndexOutOfRange,
  Singular,
  SingularSystem,
  // geometry
  ZeroVector,
  DependentBasis,
  NotInSpan,
  Degenerate,
  CollinearPoints,
  ZeroCoefficient,
  CoincidentPoints,
  ParallelPlanes,
  // proportions and mixtures
  NoSolution,
  BadWeights,
  WrongArity,
  NonPositive,
  AnnihilatingDelta,
  Unsolvable,
  UnbalancedSides,
  TargetCollision,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every kernel operation. The code identifies the
/// violated precondition; the message is human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by every literal and formula parser. `position` is a 0-based
/// offset into the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::ParseError, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace exactkit
