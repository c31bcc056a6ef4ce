#include "minhom/graph.hpp"

#include <algorithm>
#include <queue>

#include "minhom/error.hpp"

namespace minhom {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<NamedEdge>& edges,
             const std::vector<std::string>& loops) {
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end());
      dup != vertices.end()) {
    throw Error(ErrorCode::kInvalidGraph, "duplicate vertex '" + *dup + "'");
  }
  names_ = std::move(vertices);
  loops_.assign(names_.size(), false);
  adjacency_.assign(names_.size(), {});

  for (const auto& v : loops) loops_[require_index(v)] = true;
  for (const auto& [a, b] : edges) {
    VertexIndex ia = require_index(a);
    VertexIndex ib = require_index(b);
    if (ia == ib) {
      loops_[ia] = true;
      continue;
    }
    adjacency_[ia].push_back(ib);
    adjacency_[ib].push_back(ia);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

Graph Graph::from_indices(std::vector<std::string> names,
                          const std::vector<IndexEdge>& edges,
                          const std::vector<VertexIndex>& loops) {
  std::vector<NamedEdge> named;
  named.reserve(edges.size());
  for (const auto& [a, b] : edges) named.emplace_back(names.at(a), names.at(b));
  std::vector<std::string> loop_names;
  loop_names.reserve(loops.size());
  for (VertexIndex v : loops) loop_names.push_back(names.at(v));
  return Graph(std::move(names), named, loop_names);
}

std::optional<VertexIndex> Graph::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexIndex>(it - names_.begin());
}

VertexIndex Graph::require_index(std::string_view name) const {
  if (auto idx = index_of(name)) return *idx;
  throw Error(ErrorCode::kInvalidGraph,
              "unknown vertex '" + std::string(name) + "'");
}

bool Graph::adjacent(VertexIndex a, VertexIndex b) const {
  if (a == b) return loops_.at(a);
  const auto& list = adjacency_.at(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<IndexEdge> Graph::edges() const {
  std::vector<IndexEdge> out;
  out.reserve(edge_count_);
  for (VertexIndex a = 0; a < size(); ++a) {
    for (VertexIndex b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<VertexIndex> Graph::loop_vertices() const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < size(); ++v) {
    if (loops_[v]) out.push_back(v);
  }
  return out;
}

std::size_t Graph::loop_count() const {
  return static_cast<std::size_t>(
      std::count(loops_.begin(), loops_.end(), true));
}

bool Graph::is_reflexive() const {
  return std::all_of(loops_.begin(), loops_.end(), [](bool b) { return b; });
}

bool Graph::is_irreflexive() const {
  return std::none_of(loops_.begin(), loops_.end(), [](bool b) { return b; });
}

Graph Graph::induced(std::span<const VertexIndex> vertices) const {
  std::vector<std::string> names;
  std::vector<long> local(size(), -1);
  for (VertexIndex v : vertices) {
    if (local.at(v) >= 0) {
      throw Error(ErrorCode::kInvalidGraph, "duplicate vertex in induced set");
    }
    local[v] = static_cast<long>(names.size());
    names.push_back(names_[v]);
  }
  std::vector<IndexEdge> edges;
  std::vector<VertexIndex> loops;
  for (VertexIndex v : vertices) {
    if (loops_[v]) loops.push_back(static_cast<VertexIndex>(local[v]));
    for (VertexIndex w : adjacency_[v]) {
      if (v < w && local[w] >= 0) {
        edges.emplace_back(static_cast<VertexIndex>(local[v]),
                           static_cast<VertexIndex>(local[w]));
      }
    }
  }
  return from_indices(std::move(names), edges, loops);
}

Graph Graph::without_loops() const {
  Graph copy = *this;
  copy.loops_.assign(size(), false);
  return copy;
}

std::vector<VertexIndex> Bipartition::white() const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < side.size(); ++v) {
    if (side[v] == Side::kWhite) out.push_back(v);
  }
  return out;
}

std::vector<VertexIndex> Bipartition::black() const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < side.size(); ++v) {
    if (side[v] == Side::kBlack) out.push_back(v);
  }
  return out;
}

Bipartition Bipartition::swapped() const {
  Bipartition out = *this;
  for (auto& s : out.side) s = s == Side::kWhite ? Side::kBlack : Side::kWhite;
  return out;
}

std::vector<std::vector<VertexIndex>> component_vertex_sets(const Graph& g) {
  std::vector<std::vector<VertexIndex>> out;
  std::vector<bool> seen(g.size(), false);
  for (VertexIndex root = 0; root < g.size(); ++root) {
    if (seen[root]) continue;
    std::vector<VertexIndex> comp{root};
    seen[root] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (VertexIndex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& set : component_vertex_sets(g)) out.push_back(g.induced(set));
  return out;
}

bool is_connected(const Graph& g) {
  return component_vertex_sets(g).size() <= 1;
}

std::variant<Bipartition, OddCycleWitness> bipartition(const Graph& g) {
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if (g.has_loop(v)) return OddCycleWitness{{v}};
  }
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(g.size(), kUnset);
  std::vector<VertexIndex> parent(g.size(), 0);
  Bipartition result;
  result.side.assign(g.size(), Side::kWhite);

  for (VertexIndex root = 0; root < g.size(); ++root) {
    if (depth[root] != kUnset) continue;
    depth[root] = 0;
    parent[root] = root;
    std::queue<VertexIndex> queue;
    queue.push(root);
    while (!queue.empty()) {
      VertexIndex u = queue.front();
      queue.pop();
      for (VertexIndex w : g.neighbors(u)) {
        if (depth[w] == kUnset) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          result.side[w] = depth[w] % 2 == 0 ? Side::kWhite : Side::kBlack;
          queue.push(w);
        } else if (depth[w] % 2 == depth[u] % 2) {
          // BFS depths of adjacent vertices differ by at most one, so equal
          // parity means equal depth and the tree paths meet at a common
          // ancestor after the same number of steps.
          std::vector<VertexIndex> up_u{u};
          std::vector<VertexIndex> up_w{w};
          while (up_u.back() != up_w.back()) {
            up_u.push_back(parent[up_u.back()]);
            up_w.push_back(parent[up_w.back()]);
          }
          std::vector<VertexIndex> cycle(up_u.rbegin(), up_u.rend());
          cycle.insert(cycle.end(), up_w.begin(), up_w.end() - 1);
          return OddCycleWitness{std::move(cycle)};
        }
      }
    }
  }
  return result;
}

bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
  if (b.side.size() != g.size() || !g.is_irreflexive()) return false;
  for (const auto& [a, c] : g.edges()) {
    if (b.side[a] == b.side[c]) return false;
  }
  return true;
}

LoopProfile loop_profile(const Graph& g) {
  const std::size_t loops = g.loop_count();
  if (loops == g.size()) return {LoopKind::kReflexive, std::nullopt};
  if (loops == 0) return {LoopKind::kIrreflexive, std::nullopt};
  for (VertexIndex r = 0; r < g.size(); ++r) {
    if (!g.has_loop(r)) continue;
    for (VertexIndex s : g.neighbors(r)) {
      if (!g.has_loop(s)) return {LoopKind::kMixed, IndexEdge{r, s}};
    }
  }
  return {LoopKind::kMixedNoWitness, std::nullopt};
}

Graph bipartite_double(const Graph& h) {
  if (!h.is_reflexive()) {
    throw Error(ErrorCode::kNotReflexive,
                "bipartite double requires every vertex to carry a loop");
  }
  auto white = [&](VertexIndex v) {
    return h.name(v) + std::string(kWhiteCopySuffix);
  };
  auto black = [&](VertexIndex v) {
    return h.name(v) + std::string(kBlackCopySuffix);
  };
  std::vector<std::string> vertices;
  std::vector<NamedEdge> edges;
  for (VertexIndex v = 0; v < h.size(); ++v) {
    vertices.push_back(white(v));
    vertices.push_back(black(v));
    edges.emplace_back(white(v), black(v));
  }
  for (const auto& [u, v] : h.edges()) {
    edges.emplace_back(white(u), black(v));
    edges.emplace_back(white(v), black(u));
  }
  return Graph(std::move(vertices), edges);
}

namespace {

// Pattern vertices in BFS order per component so that every vertex after a
// component root has an already-mapped neighbor to prune against.
std::vector<VertexIndex> search_order(const Graph& pattern) {
  std::vector<VertexIndex> order;
  for (const auto& comp : component_vertex_sets(pattern)) {
    std::vector<bool> seen(pattern.size(), false);
    std::size_t start = order.size();
    order.push_back(comp.front());
    seen[comp.front()] = true;
    for (std::size_t head = start; head < order.size(); ++head) {
      for (VertexIndex w : pattern.neighbors(order[head])) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

bool extend_embedding(const Graph& host, const Graph& pattern,
                      const std::vector<VertexIndex>& order, std::size_t depth,
                      std::vector<VertexIndex>& image,
                      std::vector<bool>& used) {
  if (depth == order.size()) return true;
  const VertexIndex p = order[depth];
  for (VertexIndex h = 0; h < host.size(); ++h) {
    if (used[h]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k) {
      const VertexIndex q = order[k];
      ok = pattern.adjacent(p, q) == host.adjacent(h, image[q]);
    }
    if (!ok) continue;
    image[p] = h;
    used[h] = true;
    if (extend_embedding(host, pattern, order, depth + 1, image, used)) {
      return true;
    }
    used[h] = false;
  }
  return false;
}

}  // namespace

std::optional<InducedEmbedding> find_induced_embedding(const Graph& host,
                                                       const Graph& pattern) {
  if (!pattern.is_irreflexive()) {
    throw Error(ErrorCode::kInvalidGraph, "pattern must be irreflexive");
  }
  if (pattern.size() > host.size()) return std::nullopt;
  std::vector<VertexIndex> image(pattern.size(), 0);
  std::vector<bool> used(host.size(), false);
  if (extend_embedding(host, pattern, search_order(pattern), 0, image, used)) {
    return InducedEmbedding{std::move(image)};
  }
  return std::nullopt;
}

bool is_induced_embedding(const Graph& host, const Graph& pattern,
                          const InducedEmbedding& embedding) {
  const auto& image = embedding.image;
  if (image.size() != pattern.size()) return false;
  for (VertexIndex a = 0; a < image.size(); ++a) {
    if (image[a] >= host.size()) return false;
    for (VertexIndex b = a + 1; b < image.size(); ++b) {
      if (image[a] == image[b]) return false;
      if (pattern.adjacent(a, b) != host.adjacent(image[a], image[b])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

bool extend_cycle(const Graph& g, std::size_t length,
                  std::vector<VertexIndex>& path, std::vector<bool>& on_path) {
  const VertexIndex start = path.front();
  const VertexIndex last = path.back();
  const bool closing = path.size() + 1 == length;
  for (VertexIndex w : g.neighbors(last)) {
    if (w <= start || on_path[w]) continue;
    const bool touches_start = path.size() > 1 && g.adjacent(w, start);
    if (touches_start != closing) continue;
    bool chordless = true;
    for (std::size_t k = 1; k + 1 < path.size() && chordless; ++k) {
      chordless = !g.adjacent(w, path[k]);
    }
    if (!chordless) continue;
    path.push_back(w);
    if (closing) return true;
    on_path[w] = true;
    if (extend_cycle(g, length, path, on_path)) return true;
    on_path[w] = false;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<VertexIndex>> find_induced_cycle(const Graph& g,
                                                           std::size_t length) {
  if (length < 4 || length > g.size()) return std::nullopt;
  std::vector<bool> on_path(g.size(), false);
  for (VertexIndex start = 0; start < g.size(); ++start) {
    std::vector<VertexIndex> path{start};
    on_path[start] = true;
    if (extend_cycle(g, length, path, on_path)) return path;
    on_path[start] = false;
  }
  return std::nullopt;
}

bool is_induced_cycle(const Graph& g, std::span<const VertexIndex> cycle) {
  const std::size_t n = cycle.size();
  if (n < 3) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (cycle[a] >= g.size()) return false;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (cycle[a] == cycle[b]) return false;
      const bool consecutive = b == a + 1 || (a == 0 && b == n - 1);
      if (g.adjacent(cycle[a], cycle[b]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace minhom
