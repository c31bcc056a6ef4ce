#include "minhom/error.hpp"

namespace minhom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kNotReflexive: return "NotReflexive";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kPermutationMismatch: return "PermutationMismatch";
    case ErrorCode::kUnsupportedProfile: return "UnsupportedProfile";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kInvalidOrdering: return "InvalidOrdering";
    case ErrorCode::kRepresentationMismatch: return "RepresentationMismatch";
    case ErrorCode::kTiedEndpoints: return "TiedEndpoints";
    case ErrorCode::kProfileMismatch: return "ProfileMismatch";
    case ErrorCode::kMissingCost: return "MissingCost";
    case ErrorCode::kCostTableIncomplete: return "CostTableIncomplete";
    case ErrorCode::kNonHomomorphismExtracted: return "NonHomomorphismExtracted";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kNegativeResult: return "NegativeResult";
    case ErrorCode::kNotMixedEdge: return "NotMixedEdge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace minhom
