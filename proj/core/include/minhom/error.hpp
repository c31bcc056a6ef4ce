#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minhom {

enum class ErrorCode {
  kInvalidGraph,
  kNotReflexive,
  kNotBipartite,
  kPermutationMismatch,
  kUnsupportedProfile,
  kInternalInconsistency,
  kInvalidOrdering,
  kRepresentationMismatch,
  kTiedEndpoints,
  kProfileMismatch,
  kMissingCost,
  kCostTableIncomplete,
  kNonHomomorphismExtracted,
  kOverflow,
  kTooLarge,
  kInvalidPartition,
  kNegativeResult,
  kNotMixedEdge,
  kParseError,
  kSchemaError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Self-check failures indicate a bug in the library rather than bad input.
  bool is_internal() const noexcept {
    return code_ == ErrorCode::kInternalInconsistency ||
           code_ == ErrorCode::kNonHomomorphismExtracted;
  }

 private:
  ErrorCode code_;
};

}  // namespace minhom
