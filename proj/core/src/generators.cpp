#include "minhom/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace minhom {

namespace {

std::vector<std::string> shuffled_names(std::size_t n, std::string_view prefix,
                                        Rng& rng) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  std::shuffle(names.begin(), names.end(), rng);
  return names;
}

std::size_t uniform_index(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Graph random_graph(std::size_t n, double p, Rng& rng, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  std::bernoulli_distribution coin(p);
  std::vector<IndexEdge> edges;
  for (VertexIndex a = 0; a < n; ++a) {
    for (VertexIndex b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph::from_indices(std::move(names), edges);
}

Graph with_random_loops(const Graph& g, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<VertexIndex> loops;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if (coin(rng)) loops.push_back(v);
  }
  return Graph::from_indices(g.names(), g.edges(), loops);
}

Graph reflexive_closure(const Graph& g) {
  std::vector<VertexIndex> loops(g.size());
  std::iota(loops.begin(), loops.end(), VertexIndex{0});
  return Graph::from_indices(g.names(), g.edges(), loops);
}

CostTable random_costs(std::size_t sources, std::size_t targets,
                       std::int64_t max_cost, double infinite_p, Rng& rng) {
  CostTable costs(sources, targets);
  std::uniform_int_distribution<std::int64_t> value(0, max_cost);
  std::bernoulli_distribution infinite(infinite_p);
  for (VertexIndex u = 0; u < sources; ++u) {
    for (VertexIndex i = 0; i < targets; ++i) {
      costs.set(u, i, infinite(rng) ? Cost::infinite() : Cost(value(rng)));
    }
  }
  return costs;
}

ThreePartiteGraph random_three_partite(std::size_t n, double p, Rng& rng) {
  std::vector<int> part(n);
  for (auto& x : part) x = static_cast<int>(uniform_index(0, 2, rng));
  std::bernoulli_distribution coin(p);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  std::vector<IndexEdge> edges;
  for (VertexIndex a = 0; a < n; ++a) {
    for (VertexIndex b = a + 1; b < n; ++b) {
      if (part[a] != part[b] && coin(rng)) edges.emplace_back(a, b);
    }
  }
  ThreePartiteGraph tp;
  for (std::size_t i = 0; i < n; ++i) tp.parts[part[i]].push_back(names[i]);
  tp.graph = Graph::from_indices(std::move(names), edges);
  return tp;
}

Graph random_proper_interval_graph(std::size_t n, Rng& rng) {
  std::vector<std::string> names = shuffled_names(n, "w", rng);
  std::vector<IndexEdge> edges;
  std::size_t reach = 0;
  for (std::size_t i = 0; i < n; ++i) {
    reach = std::max(reach, i);
    reach = uniform_index(reach, std::min(n - 1, reach + 2), rng);
    for (std::size_t j = i + 1; j <= reach; ++j) edges.emplace_back(i, j);
  }
  std::vector<VertexIndex> loops(n);
  std::iota(loops.begin(), loops.end(), VertexIndex{0});
  return Graph::from_indices(std::move(names), edges, loops);
}

Graph random_proper_interval_bigraph(std::size_t p, std::size_t q, Rng& rng) {
  std::vector<std::string> white = shuffled_names(p, "a", rng);
  std::vector<std::string> black = shuffled_names(q, "b", rng);
  std::vector<std::string> names = white;
  names.insert(names.end(), black.begin(), black.end());
  std::vector<IndexEdge> edges;
  std::size_t left = 0;
  std::size_t right = 0;
  for (std::size_t i = 0; i < p && q > 0; ++i) {
    left = uniform_index(left, std::min(q - 1, left + 1), rng);
    right = uniform_index(std::max(left, right),
                          std::min(q - 1, std::max(left, right) + 2), rng);
    for (std::size_t j = left; j <= right; ++j) edges.emplace_back(i, p + j);
  }
  return Graph::from_indices(std::move(names), edges);
}

}  // namespace minhom
