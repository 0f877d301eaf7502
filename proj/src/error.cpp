#include "qgwa/error.hpp"

namespace qgwa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::InvalidGaloisIndex: return "InvalidGaloisIndex";
    case ErrorCode::MismatchedConductor: return "MismatchedConductor";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotInSubring: return "NotInSubring";
    case ErrorCode::IncompleteOrbit: return "IncompleteOrbit";
    case ErrorCode::MismatchedAlgebra: return "MismatchedAlgebra";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::InfiniteOrder: return "InfiniteOrder";
    case ErrorCode::GammaNotInCg: return "GammaNotInCg";
    case ErrorCode::InvalidI0: return "InvalidI0";
    case ErrorCode::OmegaRequiresQMinusOne: return "OmegaRequiresQMinusOne";
    case ErrorCode::LaurentMuInPolyBase: return "LaurentMuInPolyBase";
    case ErrorCode::InfiniteOrderGenerator: return "InfiniteOrderGenerator";
    case ErrorCode::SymmetricDefiningPolynomial: return "SymmetricDefiningPolynomial";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::RequiresQMinusOne: return "RequiresQMinusOne";
    case ErrorCode::InvalidGamma: return "InvalidGamma";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::LaurentBaseUnsupported: return "LaurentBaseUnsupported";
    case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

}  // namespace qgwa
