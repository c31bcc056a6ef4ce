#include "minhom/reductions.hpp"

#include <map>
#include <set>
#include <string>

#include "minhom/error.hpp"
#include "minhom/patterns.hpp"

namespace minhom {

namespace {

// Vertex indices of the pattern graphs (names sorted x1..x4, y1..y3).
constexpr VertexIndex kX1 = 0, kX2 = 1, kX3 = 2, kX4 = 3;
constexpr VertexIndex kY1 = 4, kY2 = 5, kY3 = 6;

std::string subdivision_name(const Graph& g, VertexIndex a, VertexIndex b) {
  return "m(" + g.name(a) + "," + g.name(b) + ")";
}

std::string path_name(std::string_view prefix, const std::string& v) {
  return std::string(prefix) + "(" + v + ")";
}

// Part number (0, 1, 2) per vertex of g.graph.
std::vector<int> part_of(const ThreePartiteGraph& g) {
  std::vector<int> part(g.graph.size(), -1);
  for (int p = 0; p < 3; ++p) {
    for (const auto& name : g.parts[p]) {
      auto v = g.graph.index_of(name);
      if (!v) {
        throw Error(ErrorCode::kInvalidPartition,
                    "part " + std::to_string(p + 1) + " names unknown vertex '" +
                        name + "'");
      }
      if (part[*v] != -1) {
        throw Error(ErrorCode::kInvalidPartition,
                    "vertex '" + name + "' appears in more than one part");
      }
      part[*v] = p;
    }
  }
  return part;
}

// Builds gstar from named pieces and fills the cost table through `cost_of`.
class GadgetBuilder {
 public:
  explicit GadgetBuilder(const Graph& original) {
    for (const auto& name : original.names()) originals_.insert(name);
  }

  void add_vertex(const std::string& name, bool generated) {
    if (generated && originals_.count(name)) {
      throw Error(ErrorCode::kInvalidPartition,
                  "generated vertex name '" + name +
                      "' collides with an original vertex");
    }
    vertices_.push_back(name);
  }
  void add_edge(const std::string& a, const std::string& b) {
    edges_.emplace_back(a, b);
  }

  template <typename CostOf>
  GadgetInstance finish(GadgetKind kind, const Graph& target,
                        std::int64_t offset, CostOf cost_of) {
    GadgetInstance inst;
    inst.kind = kind;
    inst.gstar = Graph(vertices_, edges_);
    inst.target = target;
    inst.offset = offset;
    inst.costs = CostTable(inst.gstar.size(), target.size());
    for (VertexIndex u = 0; u < inst.gstar.size(); ++u) {
      for (VertexIndex z = 0; z < target.size(); ++z) {
        inst.costs.set(u, z, Cost(cost_of(inst.gstar.name(u), z)));
      }
    }
    return inst;
  }

 private:
  std::set<std::string> originals_;
  std::vector<std::string> vertices_;
  std::vector<NamedEdge> edges_;
};

// Shared cost rule for original vertices: 0 at `zero`, 1 at `one`, `big`
// elsewhere.
std::int64_t original_cost(VertexIndex z, VertexIndex zero, VertexIndex one,
                           std::int64_t big) {
  if (z == zero) return 0;
  if (z == one) return 1;
  return big;
}

GadgetInstance build_claw(const ThreePartiteGraph& tp,
                          const std::vector<int>& part) {
  const Graph& g = tp.graph;
  const auto big = static_cast<std::int64_t>(g.size());
  GadgetBuilder b(g);
  std::map<std::string, VertexIndex> origin;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    b.add_vertex(g.name(v), false);
    origin[g.name(v)] = v;
  }
  for (const auto& [u, v] : g.edges()) {
    const std::string m = subdivision_name(g, u, v);
    b.add_vertex(m, true);
    b.add_edge(g.name(u), m);
    b.add_edge(m, g.name(v));
  }
  return b.finish(GadgetKind::kClaw, bipartite_claw(), big,
                  [&](const std::string& name, VertexIndex z) {
                    auto it = origin.find(name);
                    if (it != origin.end()) {
                      const auto x = static_cast<VertexIndex>(part[it->second]);
                      return original_cost(z, kX1 + x, kX4, big);
                    }
                    return z >= kY1 ? std::int64_t{0} : big;
                  });
}

GadgetInstance build_net(const ThreePartiteGraph& tp,
                         const std::vector<int>& part) {
  const Graph& g = tp.graph;
  const auto big =
      static_cast<std::int64_t>(2 * tp.parts[2].size() + g.size());
  GadgetBuilder b(g);
  std::map<std::string, VertexIndex> origin;
  std::set<std::string> s_vertices, t_vertices;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    const std::string& name = g.name(v);
    if (part[v] != 2) {
      b.add_vertex(name, false);
      origin[name] = v;
      continue;
    }
    const std::string path[] = {path_name("s1", name), path_name("t1", name),
                                path_name("s2", name), path_name("t2", name),
                                path_name("s3", name)};
    for (int k = 0; k < 5; ++k) {
      b.add_vertex(path[k], true);
      (k % 2 == 0 ? s_vertices : t_vertices).insert(path[k]);
      if (k > 0) b.add_edge(path[k - 1], path[k]);
    }
  }
  for (auto [u, v] : g.edges()) {
    if (part[u] > part[v]) std::swap(u, v);
    if (part[v] != 2) {
      const std::string m = subdivision_name(g, std::min(u, v), std::max(u, v));
      b.add_vertex(m, true);
      b.add_edge(g.name(u), m);
      b.add_edge(m, g.name(v));
    } else if (part[u] == 0) {
      b.add_edge(g.name(u), path_name("s1", g.name(v)));
    } else {
      b.add_edge(g.name(u), path_name("s3", g.name(v)));
    }
  }
  return b.finish(GadgetKind::kNet, bipartite_net(), big,
                  [&](const std::string& name, VertexIndex z) -> std::int64_t {
                    auto it = origin.find(name);
                    if (it != origin.end()) {
                      const auto x = static_cast<VertexIndex>(part[it->second]);
                      return original_cost(z, kX1 + x, kX4, big);
                    }
                    if (s_vertices.count(name)) return z == kY3 ? 0 : 1;
                    if (t_vertices.count(name)) return z == kX4 ? 1 : 0;
                    return 0;
                  });
}

GadgetInstance build_tent(const ThreePartiteGraph& tp,
                          const std::vector<int>& part) {
  const Graph& g = tp.graph;
  const auto big = static_cast<std::int64_t>(g.size());
  GadgetBuilder b(g);
  std::map<std::string, VertexIndex> origin;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    b.add_vertex(g.name(v), false);
    origin[g.name(v)] = v;
  }
  for (const auto& [u, v] : g.edges()) {
    if (part[u] == 2 || part[v] == 2) {
      b.add_edge(g.name(u), g.name(v));
      continue;
    }
    const std::string m = subdivision_name(g, u, v);
    b.add_vertex(m, true);
    b.add_edge(g.name(u), m);
    b.add_edge(m, g.name(v));
  }
  constexpr VertexIndex kZero[] = {kY2, kY3, kX3};
  constexpr VertexIndex kOne[] = {kY1, kY1, kX1};
  return b.finish(GadgetKind::kTent, bipartite_tent(), big,
                  [&](const std::string& name, VertexIndex z) -> std::int64_t {
                    auto it = origin.find(name);
                    if (it != origin.end()) {
                      const int p = part[it->second];
                      return original_cost(z, kZero[p], kOne[p], big);
                    }
                    return z == kX1 ? big : 0;
                  });
}

}  // namespace

void validate(const ThreePartiteGraph& g) {
  if (!g.graph.is_irreflexive()) {
    throw Error(ErrorCode::kInvalidPartition, "3-partite graph has a loop");
  }
  const std::vector<int> part = part_of(g);
  for (VertexIndex v = 0; v < g.graph.size(); ++v) {
    if (part[v] == -1) {
      throw Error(ErrorCode::kInvalidPartition,
                  "vertex '" + g.graph.name(v) + "' is in no part");
    }
  }
  for (const auto& [a, b] : g.graph.edges()) {
    if (part[a] == part[b]) {
      throw Error(ErrorCode::kInvalidPartition,
                  "edge " + g.graph.name(a) + g.graph.name(b) +
                      " lies inside part " + std::to_string(part[a] + 1));
    }
  }
}

std::string_view to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kClaw: return "claw";
    case GadgetKind::kNet: return "net";
    case GadgetKind::kTent: return "tent";
    case GadgetKind::kLoopNonLoop: return "loop_nonloop";
  }
  return "unknown";
}

GadgetKind gadget_kind_from_string(std::string_view name) {
  for (GadgetKind kind : {GadgetKind::kClaw, GadgetKind::kNet,
                          GadgetKind::kTent, GadgetKind::kLoopNonLoop}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::kSchemaError,
              "unknown gadget kind '" + std::string(name) + "'");
}

GadgetInstance gadget_build(const ThreePartiteGraph& g, GadgetKind kind) {
  validate(g);
  const std::vector<int> part = part_of(g);
  switch (kind) {
    case GadgetKind::kClaw: return build_claw(g, part);
    case GadgetKind::kNet: return build_net(g, part);
    case GadgetKind::kTent: return build_tent(g, part);
    case GadgetKind::kLoopNonLoop: break;
  }
  throw Error(ErrorCode::kInvalidPartition,
              "loop/non-loop instances come from loop_nonloop_reduction");
}

std::int64_t recover_alpha(const GadgetInstance& inst, std::int64_t mch) {
  const std::int64_t alpha = inst.offset - mch;
  if (alpha < 0) {
    throw Error(ErrorCode::kNegativeResult,
                "mch " + std::to_string(mch) + " exceeds offset " +
                    std::to_string(inst.offset));
  }
  return alpha;
}

std::vector<std::string> recover_independent_set(const GadgetInstance& inst,
                                                 const ThreePartiteGraph& g,
                                                 const Homomorphism& f) {
  std::vector<std::string> independent;
  const std::vector<int> part = part_of(g);
  for (VertexIndex v = 0; v < g.graph.size(); ++v) {
    const std::string& name = g.graph.name(v);
    if (inst.kind == GadgetKind::kNet && part[v] == 2) {
      const VertexIndex s1 = inst.gstar.require_index(path_name("s1", name));
      const VertexIndex s3 = inst.gstar.require_index(path_name("s3", name));
      if (f.image.at(s1) == kY3 && f.image.at(s3) == kY3) {
        independent.push_back(name);
      }
      continue;
    }
    const VertexIndex u = inst.gstar.require_index(name);
    if (inst.costs.at(u, f.image.at(u)) == Cost(0)) independent.push_back(name);
  }
  return independent;
}

GadgetInstance loop_nonloop_reduction(const Graph& g, const Graph& h,
                                      std::string_view r, std::string_view s) {
  if (!g.is_irreflexive()) {
    throw Error(ErrorCode::kInvalidGraph,
                "loop/non-loop reduction needs a loopless source graph");
  }
  const auto ri = h.index_of(r);
  const auto si = h.index_of(s);
  if (!ri || !si || *ri == *si || !h.adjacent(*ri, *si) || !h.has_loop(*ri) ||
      h.has_loop(*si)) {
    throw Error(ErrorCode::kNotMixedEdge,
                std::string(r) + std::string(s) +
                    " is not an edge with a loop at its first end only");
  }
  GadgetInstance inst;
  inst.kind = GadgetKind::kLoopNonLoop;
  inst.gstar = g;
  inst.target = h;
  inst.offset = static_cast<std::int64_t>(g.size());
  inst.costs = CostTable(g.size(), h.size(), Cost(1));
  for (VertexIndex u = 0; u < g.size(); ++u) inst.costs.set(u, *si, Cost(0));
  return inst;
}

}  // namespace minhom
