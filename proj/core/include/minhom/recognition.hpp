#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minhom/graph.hpp"
#include "minhom/patterns.hpp"

namespace minhom {

// w_1..w_p such that i < j < k and w_i w_k an edge force w_i w_j and w_j w_k.
struct ReflexiveOrdering {
  std::vector<VertexIndex> order;
  friend bool operator==(const ReflexiveOrdering&,
                         const ReflexiveOrdering&) = default;
};

// White order u_1..u_p and black order v_1..v_q such that i < j, s < r and
// u_i v_r, u_j v_s edges force u_i v_s and u_j v_r. The white and black lists
// also fix the bipartition.
struct BigraphOrdering {
  std::vector<VertexIndex> white;
  std::vector<VertexIndex> black;

  Bipartition bipartition(std::size_t vertex_count) const;
  friend bool operator==(const BigraphOrdering&,
                         const BigraphOrdering&) = default;
};

using MinMaxOrdering = std::variant<ReflexiveOrdering, BigraphOrdering>;

// Throws kNotReflexive or kPermutationMismatch.
bool verify_reflexive_ordering(const Graph& h,
                               std::span<const VertexIndex> order);
// Throws kNotBipartite when `b` is not a proper coloring of h, and
// kPermutationMismatch when the orders do not cover the two sides.
bool verify_bigraph_ordering(const Graph& h, const Bipartition& b,
                             std::span<const VertexIndex> white_order,
                             std::span<const VertexIndex> black_order);
bool verify_ordering(const Graph& h, const MinMaxOrdering& ordering);

// Exact: returns nullopt only when no Min-Max ordering exists. A refinement
// heuristic runs first; when its result fails verification an exhaustive
// backtracking search with Min-Max pruning decides. Throws
// kUnsupportedProfile for mixed-loop or non-bipartite irreflexive graphs.
std::optional<MinMaxOrdering> find_ordering(const Graph& h);

// Certificates of NP-completeness. Vertex references are by name so that a
// certificate stays meaningful outside the component it was computed on.
struct MixedLoopEdge {
  std::string looped;
  std::string unlooped;
  friend bool operator==(const MixedLoopEdge&, const MixedLoopEdge&) = default;
};

struct NonBipartiteComponent {
  std::vector<std::string> cycle;
  friend bool operator==(const NonBipartiteComponent&,
                         const NonBipartiteComponent&) = default;
};

struct LongInducedCycle {
  std::vector<std::string> cycle;
  friend bool operator==(const LongInducedCycle&,
                         const LongInducedCycle&) = default;
};

// image[k] is the host vertex for pattern vertex k (x1, x2, x3, x4, y1, y2,
// y3 in that order).
struct ObstructionEmbedding {
  Obstruction pattern = Obstruction::kClaw;
  std::vector<std::string> image;
  friend bool operator==(const ObstructionEmbedding&,
                         const ObstructionEmbedding&) = default;
};

struct NpcCertificate;

// Certificate found in the bipartite double of a reflexive component.
struct ReflexiveViaDouble {
  std::shared_ptr<const NpcCertificate> inner;
  friend bool operator==(const ReflexiveViaDouble& a,
                         const ReflexiveViaDouble& b);
};

struct NpcCertificate {
  using Witness = std::variant<MixedLoopEdge, NonBipartiteComponent,
                               LongInducedCycle, ObstructionEmbedding,
                               ReflexiveViaDouble>;
  Witness witness;

  std::string_view kind() const;
  friend bool operator==(const NpcCertificate&,
                         const NpcCertificate&) = default;
};

// Re-checks a certificate against the component it claims to witness.
bool check_certificate(const Graph& component, const NpcCertificate& cert);

// For a connected irreflexive bipartite graph without a Min-Max ordering:
// claw, net, tent embeddings are tried in that order, then induced cycles of
// length 6, 8, ... Throws kInternalInconsistency when nothing is found.
NpcCertificate find_forbidden_structure(const Graph& h);

struct ComponentVerdict {
  Graph component;
  std::variant<MinMaxOrdering, NpcCertificate> verdict;

  bool is_poly() const {
    return std::holds_alternative<MinMaxOrdering>(verdict);
  }
  friend bool operator==(const ComponentVerdict&,
                         const ComponentVerdict&) = default;
};

struct Classification {
  std::vector<ComponentVerdict> components;

  bool is_poly() const;
  // One ordering per component; empty unless is_poly().
  std::vector<MinMaxOrdering> orderings() const;
  // Certificate of the first failing component, or nullptr.
  const NpcCertificate* certificate() const;

  friend bool operator==(const Classification&,
                         const Classification&) = default;
};

Classification classify(const Graph& h);

}  // namespace minhom
