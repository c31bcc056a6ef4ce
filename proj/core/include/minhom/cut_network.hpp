#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "minhom/costs.hpp"
#include "minhom/graph.hpp"
#include "minhom/recognition.hpp"

namespace minhom {

// All positions are 0-based indices into the relevant order.
struct ReflexiveTables {
  // Largest earlier position not adjacent to position i.
  std::vector<std::optional<std::size_t>> last_non_neighbor;
  std::vector<std::size_t> left;   // last_non_neighbor + 1, else 0
  std::vector<std::size_t> right;  // largest adjacent position (>= i)
  friend bool operator==(const ReflexiveTables&,
                         const ReflexiveTables&) = default;
};

// Leftmost/rightmost neighbor on the opposite side, per position on one side;
// nullopt for vertices without neighbors.
struct SideTables {
  std::vector<std::optional<std::size_t>> left;
  std::vector<std::optional<std::size_t>> right;
  friend bool operator==(const SideTables&, const SideTables&) = default;
};

struct BigraphTables {
  SideTables white;  // positions in the black order
  SideTables black;  // positions in the white order
  friend bool operator==(const BigraphTables&, const BigraphTables&) = default;
};

using NeighborTables = std::variant<ReflexiveTables, BigraphTables>;

// Throws kInvalidOrdering unless `ordering` passes its verifier. Asserts that
// left and right are nondecreasing.
NeighborTables neighbor_tables(const Graph& h, const MinMaxOrdering& ordering);

enum class ArcKind { kSource, kChain, kSink, kConstraint };

struct Arc {
  ArcKind kind;
  std::size_t from;
  std::size_t to;
  std::int64_t capacity;
};

// One chain of nodes per source vertex; targets[k] is the target vertex that
// chain position k stands for.
struct Chain {
  std::size_t first_node = 0;
  std::vector<VertexIndex> targets;
};

// The product network: s, t, one chain (u,1) .. (u,len) per source vertex u,
// chain arcs weighted by the cost of the position they leave, and constraint
// arcs of capacity `sentinel` standing in for infinity. A source vertex with
// an empty chain contributes a sentinel arc s -> t.
struct CutNetwork {
  static constexpr std::size_t kSourceNode = 0;
  static constexpr std::size_t kSinkNode = 1;

  std::size_t node_count = 2;
  std::vector<Chain> chains;  // indexed by source vertex
  std::vector<Arc> arcs;
  std::int64_t sentinel = 1;  // 1 + sum of finite chain costs

  std::size_t node(VertexIndex u, std::size_t position) const {
    return chains.at(u).first_node + position;
  }
};

// Reflexive ordering: `orientation` must be empty. Bigraph ordering:
// `orientation` is a bipartition of g; white source vertices get chains over
// the white order and black ones over the black order. `g` must be loop-free
// and `h` connected. Throws kProfileMismatch, kMissingCost, kInvalidOrdering,
// kOverflow.
CutNetwork build_cut_network(const Graph& g, const CostTable& costs,
                             const Graph& h, const MinMaxOrdering& ordering,
                             const std::optional<Bipartition>& orientation);

struct MinCut {
  std::int64_t value = 0;
  // Source side induced by residual reachability from s after a max flow.
  std::vector<bool> source_side;
};

MinCut min_cut(const CutNetwork& net);

// f(u) = target of the largest chain position of u on the source side. The
// result is checked to be a homomorphism of g to h; failure throws
// kNonHomomorphismExtracted.
Homomorphism extract_homomorphism(const CutNetwork& net,
                                  const std::vector<bool>& source_side,
                                  const Graph& g, const Graph& h);

// Weight of the prefix cut {s} + {(u,0..positions[u])}, saturating at
// INT64_MAX.
std::int64_t prefix_cut_value(const CutNetwork& net,
                              const std::vector<std::size_t>& positions);

}  // namespace minhom
