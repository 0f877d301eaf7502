#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgwa {

enum class ErrorCode {
  DivisionByZero,
  ZeroInput,
  InvalidGaloisIndex,
  MismatchedConductor,
  InvalidParameter,
  ZeroPolynomial,
  NotInSubring,
  IncompleteOrbit,
  MismatchedAlgebra,
  InvalidAutomorphism,
  InfiniteOrder,
  GammaNotInCg,
  InvalidI0,
  OmegaRequiresQMinusOne,
  LaurentMuInPolyBase,
  InfiniteOrderGenerator,
  SymmetricDefiningPolynomial,
  HypothesisViolated,
  RequiresQMinusOne,
  InvalidGamma,
  VerificationFailed,
  LaurentBaseUnsupported,
  CrossCheckMismatch,
  ParseError,
  SemanticError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qgwa
