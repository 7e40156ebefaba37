#include "skewext/error.hpp"

namespace skewext {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyAmbient: return "EmptyAmbient";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::NotDirect: return "NotDirect";
    case ErrorCode::NotInSum: return "NotInSum";
    case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
    case ErrorCode::NotSubgraph: return "NotSubgraph";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::InvalidTriplet: return "InvalidTriplet";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::NotSkewSelfAdjoint: return "NotSkewSelfAdjoint";
    case ErrorCode::NotRestriction: return "NotRestriction";
    case ErrorCode::ReadoffSingular: return "ReadoffSingular";
    case ErrorCode::NotDissipative: return "NotDissipative";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::IllDefined: return "IllDefined";
    case ErrorCode::NotContraction: return "NotContraction";
    case ErrorCode::TraceNotZero: return "TraceNotZero";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace skewext
