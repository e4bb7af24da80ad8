#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mathpar {

/// 1-based position in the source text of a section.
struct SourcePos {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

enum class ErrorCode {
  // lexing / parsing
  UnterminatedQuote,
  IllegalCharacter,
  UnexpectedToken,
  UnknownCommand,
  UnbalancedParens,
  // spaces and scalars
  UnknownAlgebra,
  InvalidSignature,
  DuplicateVariable,
  DivisionByZero,
  DomainMismatch,
  UndefinedProduct,
  UndefinedValue,
  // symbolic layer
  ArityError,
  UnsupportedFunction,
  NonPolynomialIntegrand,
  // solvers
  ZeroPolynomial,
  NonConvergence,
  NotUnivariate,
  PositiveDimensional,
  NoSolution,
  // tropical
  DimensionMismatch,
  SignatureMismatch,
  StarDiverges,
  NonInvertibleSignature,
  Unreachable,
  // session
  UnboundIdentifier,
  WrongSpace,
  Unsupported,
  Cancelled,
};

std::string_view errorCodeName(ErrorCode code) noexcept;

/// The single exception type thrown by the kernel. Carries a machine-readable
/// code and, when known, the source position of the offending token.
class MathparError : public std::runtime_error {
 public:
  MathparError(ErrorCode code, const std::string& message,
               std::optional<SourcePos> pos = std::nullopt)
      : std::runtime_error(message), code_(code), pos_(pos) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }

  void setPositionIfMissing(SourcePos pos) {
    if (!pos_) pos_ = pos;
  }

 private:
  ErrorCode code_;
  std::optional<SourcePos> pos_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw MathparError(code, message);
}

}  // namespace mathpar
