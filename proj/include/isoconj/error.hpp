#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoconj {

/// Machine-readable failure categories. Every engine error maps to exactly one.
enum class ErrorCode {
  CompositeCharacteristic,
  FieldTooLarge,
  LevelMismatch,
  ZeroPolynomial,
  SingularOperator,
  NotSelfDual,
  ShapeError,
  InvalidForm,
  DegeneratePairing,
  IsotropyViolation,
  NotIsometry,
  CharacteristicTooSmall,
  NotNilpotent,
  NotInLieAlgebra,
  ZeroNilpotent,
  NotUnipotent,
  DivisorMismatch,
  TooLarge,
  ParseError,
  GateError,
  Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isoconj
