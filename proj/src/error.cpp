#include "isoconj/error.hpp"

namespace isoconj {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::SingularOperator: return "SingularOperator";
    case ErrorCode::NotSelfDual: return "NotSelfDual";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::InvalidForm: return "InvalidForm";
    case ErrorCode::DegeneratePairing: return "DegeneratePairing";
    case ErrorCode::IsotropyViolation: return "IsotropyViolation";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotInLieAlgebra: return "NotInLieAlgebra";
    case ErrorCode::ZeroNilpotent: return "ZeroNilpotent";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::DivisorMismatch: return "DivisorMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::GateError: return "GateError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace isoconj
