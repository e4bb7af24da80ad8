#include "mathpar/error.hpp"

namespace mathpar {

std::string_view errorCodeName(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnterminatedQuote: return "UnterminatedQuote";
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::UnexpectedToken: return "UnexpectedToken";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::UnknownAlgebra: return "UnknownAlgebra";
    case ErrorCode::InvalidSignature: return "InvalidSignature";
    case ErrorCode::DuplicateVariable: return "DuplicateVariable";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::UndefinedProduct: return "UndefinedProduct";
    case ErrorCode::UndefinedValue: return "UndefinedValue";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::UnsupportedFunction: return "UnsupportedFunction";
    case ErrorCode::NonPolynomialIntegrand: return "NonPolynomialIntegrand";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NotUnivariate: return "NotUnivariate";
    case ErrorCode::PositiveDimensional: return "PositiveDimensional";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::StarDiverges: return "StarDiverges";
    case ErrorCode::NonInvertibleSignature: return "NonInvertibleSignature";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::UnboundIdentifier: return "UnboundIdentifier";
    case ErrorCode::WrongSpace: return "WrongSpace";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::Cancelled: return "Cancelled";
  }
  return "Unknown";
}

}  // namespace mathpar
