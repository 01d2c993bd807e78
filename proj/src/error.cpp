#include "pm/error.hpp"

namespace pm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorCode::NonMaximalFacet: return "NonMaximalFacet";
    case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
    case ErrorCode::NotAFace: return "NotAFace";
    case ErrorCode::NotAFacet: return "NotAFacet";
    case ErrorCode::NotInduced: return "NotInduced";
    case ErrorCode::VertexCollision: return "VertexCollision";
    case ErrorCode::VertexExists: return "VertexExists";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidToken: return "InvalidToken";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::NotWeakPMWithBoundary: return "NotWeakPMWithBoundary";
    case ErrorCode::NotNormalPM: return "NotNormalPM";
    case ErrorCode::NotA2Manifold: return "NotA2Manifold";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::LinkSpansFace: return "LinkSpansFace";
    case ErrorCode::NotDisjointFacets: return "NotDisjointFacets";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotInducedStandardSphere: return "NotInducedStandardSphere";
    case ErrorCode::NotTwoSided: return "NotTwoSided";
    case ErrorCode::NotSubcomplex: return "NotSubcomplex";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::InteriorVertexCollision: return "InteriorVertexCollision";
    case ErrorCode::SelectorInvalid: return "SelectorInvalid";
    case ErrorCode::NotStacked: return "NotStacked";
    case ErrorCode::ArgumentOutOfRange: return "ArgumentOutOfRange";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::TooLargeForExhaustiveSearch: return "TooLargeForExhaustiveSearch";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace pm
