#pragma once

#include <cstdint>

#include "minhom/costs.hpp"
#include "minhom/graph.hpp"
#include "minhom/solver.hpp"

namespace minhom {

struct OracleOptions {
  // Search nodes allowed before giving up with kTooLarge.
  std::uint64_t node_limit = 1'000'000'000;
};

// Exact minimum-cost homomorphism by backtracking over every target graph,
// including NP-complete ones. Source components are solved independently;
// within one, vertices are placed most-constrained first with adjacency and
// cost-bound pruning. Returns Optimal or NoHomomorphism.
SolveResult brute_force_mch(const Graph& g, const CostTable& costs,
                            const Graph& h, const OracleOptions& options = {});

inline constexpr std::size_t kAlphaVertexLimit = 30;

// Maximum independent set size by branch and bound on a maximum-degree
// vertex. Loops are ignored. Throws kTooLarge above kAlphaVertexLimit.
std::size_t brute_force_alpha(const Graph& g);

}  // namespace minhom
