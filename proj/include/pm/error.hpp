#pragma once

#include <stdexcept>
#include <string>

namespace pm {

enum class ErrorCode {
  DuplicateVertexInFacet,
  NonMaximalFacet,
  DimensionOutOfRange,
  NotAFace,
  NotAFacet,
  NotInduced,
  VertexCollision,
  VertexExists,
  UnknownVertex,
  InvalidToken,
  NotPure,
  NotWeakPMWithBoundary,
  NotNormalPM,
  NotA2Manifold,
  HypothesisViolated,
  WrongDegree,
  LinkSpansFace,
  NotDisjointFacets,
  NotAdmissible,
  NotInducedStandardSphere,
  NotTwoSided,
  NotSubcomplex,
  BoundaryMismatch,
  InteriorVertexCollision,
  SelectorInvalid,
  NotStacked,
  ArgumentOutOfRange,
  NonIntegralResult,
  TooLargeForExhaustiveSearch,
  Unsupported,
  ParseError,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception type; `code()` identifies the contract violation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pm
