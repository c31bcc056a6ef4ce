#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace minhom {

using VertexIndex = std::size_t;
using IndexEdge = std::pair<VertexIndex, VertexIndex>;
using NamedEdge = std::pair<std::string, std::string>;

// Undirected graph with optional loops and opaque string vertex names.
//
// Vertices are kept sorted by name, so vertex index order is identifier order
// and every "smallest identifier" tie-break in the library is "smallest
// index". Loops live in their own per-vertex flag and never appear in the
// edge list. The graph is immutable once constructed.
class Graph {
 public:
  Graph() = default;

  // Throws Error(kInvalidGraph) on duplicate vertices or dangling endpoints.
  // A pair (v, v) in `edges` is accepted and stored as a loop.
  Graph(std::vector<std::string> vertices, const std::vector<NamedEdge>& edges,
        const std::vector<std::string>& loops = {});

  // Index-based construction for generated graphs. `names.size()` fixes the
  // vertex count; names must be unique but need not be sorted.
  static Graph from_indices(std::vector<std::string> names,
                            const std::vector<IndexEdge>& edges,
                            const std::vector<VertexIndex>& loops = {});

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(VertexIndex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexIndex> index_of(std::string_view name) const;
  // Like index_of but throws Error(kInvalidGraph) for unknown names.
  VertexIndex require_index(std::string_view name) const;

  bool has_loop(VertexIndex v) const { return loops_.at(v); }
  // adjacent(v, v) reports the loop at v.
  bool adjacent(VertexIndex a, VertexIndex b) const;
  // Sorted neighbors, excluding v itself.
  const std::vector<VertexIndex>& neighbors(VertexIndex v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }

  // Non-loop edges as (a, b) with a < b, sorted.
  std::vector<IndexEdge> edges() const;
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::vector<VertexIndex> loop_vertices() const;
  std::size_t loop_count() const;

  bool is_reflexive() const;
  bool is_irreflexive() const;

  // Subgraph induced by `vertices` (any order, no duplicates).
  Graph induced(std::span<const VertexIndex> vertices) const;
  Graph without_loops() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<bool> loops_;
  std::vector<std::vector<VertexIndex>> adjacency_;
  std::size_t edge_count_ = 0;
};

enum class Side { kWhite, kBlack };

struct Bipartition {
  std::vector<Side> side;  // indexed by vertex

  std::vector<VertexIndex> white() const;
  std::vector<VertexIndex> black() const;
  Bipartition swapped() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// An odd closed walk that is in fact a simple odd cycle (consecutive vertices
// adjacent, last adjacent to first), or a single looped vertex.
struct OddCycleWitness {
  std::vector<VertexIndex> cycle;

  bool is_loop() const { return cycle.size() == 1; }
  friend bool operator==(const OddCycleWitness&,
                         const OddCycleWitness&) = default;
};

enum class LoopKind { kReflexive, kIrreflexive, kMixed, kMixedNoWitness };

struct LoopProfile {
  LoopKind kind = LoopKind::kIrreflexive;
  // For kMixed: `first` carries the loop, `second` does not.
  std::optional<IndexEdge> witness;

  friend bool operator==(const LoopProfile&, const LoopProfile&) = default;
};

// Injective map pattern vertex -> host vertex.
struct InducedEmbedding {
  std::vector<VertexIndex> image;
  friend bool operator==(const InducedEmbedding&,
                         const InducedEmbedding&) = default;
};

// Vertex sets of the components, each sorted, ordered by smallest vertex.
std::vector<std::vector<VertexIndex>> component_vertex_sets(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);
bool is_connected(const Graph& g);

std::variant<Bipartition, OddCycleWitness> bipartition(const Graph& g);
// Checks that `b` is a proper two-coloring of a loop-free `g`.
bool is_valid_bipartition(const Graph& g, const Bipartition& b);

LoopProfile loop_profile(const Graph& g);

// Suffixes used for the two copies of a vertex in the bipartite double.
inline constexpr std::string_view kWhiteCopySuffix = "'";
inline constexpr std::string_view kBlackCopySuffix = "''";

// For reflexive h: vertices v' and v'', edges v'v'' for every v and u'v'',
// v'u'' for every edge uv. Throws Error(kNotReflexive).
Graph bipartite_double(const Graph& h);

// Backtracking search for an induced copy of an irreflexive `pattern` inside
// `host`. Deterministic: the first embedding in identifier order is returned.
std::optional<InducedEmbedding> find_induced_embedding(const Graph& host,
                                                       const Graph& pattern);
bool is_induced_embedding(const Graph& host, const Graph& pattern,
                          const InducedEmbedding& embedding);

// Induced cycle with exactly `length` (>= 4) vertices, smallest start vertex
// first. Loops are ignored.
std::optional<std::vector<VertexIndex>> find_induced_cycle(const Graph& g,
                                                           std::size_t length);
bool is_induced_cycle(const Graph& g, std::span<const VertexIndex> cycle);

}  // namespace minhom
