#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "minhom/costs.hpp"
#include "minhom/graph.hpp"
#include "minhom/reductions.hpp"

namespace minhom {

using Rng = std::mt19937_64;

// G(n, p) on vertices <prefix>0 .. <prefix>(n-1), no loops.
Graph random_graph(std::size_t n, double p, Rng& rng,
                   std::string_view prefix = "v");

// Copy of g with each vertex looped independently with probability p.
Graph with_random_loops(const Graph& g, double p, Rng& rng);

// Every vertex looped.
Graph reflexive_closure(const Graph& g);

// Uniform costs in [0, max_cost], each entry infinite with probability
// infinite_p.
CostTable random_costs(std::size_t sources, std::size_t targets,
                       std::int64_t max_cost, double infinite_p, Rng& rng);

// Each vertex lands in a uniformly random part; cross-part pairs become
// edges with probability p.
ThreePartiteGraph random_three_partite(std::size_t n, double p, Rng& rng);

// Reflexive graph with an umbrella ordering built in: position i is adjacent
// to i+1..R(i) for a random nondecreasing R. Names are shuffled so that the
// hidden order is not the identifier order.
Graph random_proper_interval_graph(std::size_t n, Rng& rng);

// Bigraph with p white and q black vertices whose white neighborhoods are
// intervals [L(i), R(i)] with L and R nondecreasing. Isolated vertices are
// possible. Names shuffled as above.
Graph random_proper_interval_bigraph(std::size_t p, std::size_t q, Rng& rng);

}  // namespace minhom
