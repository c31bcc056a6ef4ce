#pragma once

#include <string>
#include <vector>

#include "minhom/graph.hpp"

namespace minhom::testing {

inline Graph make_graph(std::vector<std::string> vertices,
                        std::vector<NamedEdge> edges,
                        std::vector<std::string> loops = {}) {
  return Graph(std::move(vertices), edges, loops);
}

inline std::vector<std::string> numbered(const std::string& prefix,
                                         std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline Graph loop_all(const Graph& g) {
  std::vector<VertexIndex> loops;
  for (VertexIndex v = 0; v < g.size(); ++v) loops.push_back(v);
  return Graph::from_indices(g.names(), g.edges(), loops);
}

inline Graph path_graph(std::size_t n, const std::string& prefix = "p") {
  std::vector<IndexEdge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_indices(numbered(prefix, n), edges);
}

inline Graph cycle_graph(std::size_t n, const std::string& prefix = "c") {
  std::vector<IndexEdge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_indices(numbered(prefix, n), edges);
}

inline Graph complete_graph(std::size_t n, const std::string& prefix = "k") {
  std::vector<IndexEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_indices(numbered(prefix, n), edges);
}

inline Graph complete_bipartite(std::size_t p, std::size_t q) {
  std::vector<std::string> names = numbered("a", p);
  for (const auto& b : numbered("b", q)) names.push_back(b);
  std::vector<IndexEdge> edges;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) edges.emplace_back(i, p + j);
  }
  return Graph::from_indices(names, edges);
}

inline Graph empty_graph(std::size_t n, const std::string& prefix = "e") {
  return Graph::from_indices(numbered(prefix, n), {});
}

// Reflexive K2 {w1, w2}.
inline Graph reflexive_k2() {
  return make_graph({"w1", "w2"}, {{"w1", "w2"}}, {"w1", "w2"});
}

// Reflexive path a-b-c.
inline Graph reflexive_p3() {
  return make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}},
                    {"a", "b", "c"});
}

// Path u1 v1 u2 v2 as a bigraph.
inline Graph p4_bigraph() {
  return make_graph({"u1", "u2", "v1", "v2"},
                    {{"u1", "v1"}, {"u2", "v1"}, {"u2", "v2"}});
}

inline std::vector<VertexIndex> indices(const Graph& g,
                                        const std::vector<std::string>& names) {
  std::vector<VertexIndex> out;
  for (const auto& n : names) out.push_back(g.require_index(n));
  return out;
}

}  // namespace minhom::testing
