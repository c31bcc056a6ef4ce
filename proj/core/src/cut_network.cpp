#include "minhom/cut_network.hpp"

#include <limits>
#include <string>

#include "minhom/error.hpp"
#include "minhom/max_flow.hpp"

namespace minhom {

namespace {

void require_valid(const Graph& h, const MinMaxOrdering& ordering) {
  bool valid = false;
  try {
    valid = verify_ordering(h, ordering);
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidOrdering, e.what());
  }
  if (!valid) {
    throw Error(ErrorCode::kInvalidOrdering,
                "ordering violates the Min-Max condition");
  }
}

template <typename T>
void require_nondecreasing(const std::vector<std::optional<T>>& values) {
  std::optional<T> last;
  for (const auto& v : values) {
    if (!v) continue;
    if (last && *v < *last) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "neighbor table is not monotone");
    }
    last = v;
  }
}

SideTables side_tables(const Graph& h, const std::vector<VertexIndex>& side,
                       const std::vector<VertexIndex>& other) {
  SideTables t;
  for (VertexIndex u : side) {
    std::optional<std::size_t> left;
    std::optional<std::size_t> right;
    for (std::size_t k = 0; k < other.size(); ++k) {
      if (!h.adjacent(u, other[k])) continue;
      if (!left) left = k;
      right = k;
    }
    t.left.push_back(left);
    t.right.push_back(right);
  }
  require_nondecreasing(t.left);
  require_nondecreasing(t.right);
  return t;
}

ReflexiveTables reflexive_tables(const Graph& h,
                                 const std::vector<VertexIndex>& order) {
  ReflexiveTables t;
  const std::size_t p = order.size();
  for (std::size_t i = 0; i < p; ++i) {
    std::optional<std::size_t> gap;
    for (std::size_t j = 0; j < i; ++j) {
      if (!h.adjacent(order[i], order[j])) gap = j;
    }
    std::size_t right = i;
    for (std::size_t j = i + 1; j < p; ++j) {
      if (h.adjacent(order[i], order[j])) right = j;
    }
    t.last_non_neighbor.push_back(gap);
    t.left.push_back(gap ? *gap + 1 : 0);
    t.right.push_back(right);
    // Earlier positions are adjacent exactly when they lie after the gap.
    for (std::size_t j = 0; j < i; ++j) {
      if (h.adjacent(order[i], order[j]) != (j >= t.left.back())) {
        throw Error(ErrorCode::kInternalInconsistency,
                    "earlier neighbors of a position are not contiguous");
      }
    }
  }
  for (std::size_t i = 1; i < p; ++i) {
    if (t.left[i] < t.left[i - 1] || t.right[i] < t.right[i - 1]) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "neighbor table is not monotone");
    }
  }
  return t;
}

std::int64_t checked_sentinel(const CostTable& costs, const Graph& g,
                              const std::vector<Chain>& chains) {
  auto overflow = [] {
    return Error(ErrorCode::kOverflow,
                 "cut network capacities do not fit in 63 bits");
  };
  std::int64_t sentinel = 1;
  for (VertexIndex u = 0; u < g.size(); ++u) {
    for (VertexIndex target : chains[u].targets) {
      Cost c = costs.at(u, target);
      if (!c.is_infinite() &&
          __builtin_add_overflow(sentinel, c.value(), &sentinel)) {
        throw overflow();
      }
    }
  }
  // Flow out of s never exceeds one sentinel per source vertex plus one.
  std::int64_t bound = 0;
  if (__builtin_mul_overflow(sentinel,
                             static_cast<std::int64_t>(g.size() + 1), &bound)) {
    throw overflow();
  }
  return sentinel;
}

void add_chain_arcs(CutNetwork& net, const CostTable& costs, VertexIndex u) {
  const Chain& chain = net.chains[u];
  const std::size_t len = chain.targets.size();
  auto capacity = [&](std::size_t k) {
    Cost c = costs.at(u, chain.targets[k]);
    return c.is_infinite() ? net.sentinel : c.value();
  };
  if (len == 0) {
    net.arcs.push_back({ArcKind::kSink, CutNetwork::kSourceNode,
                        CutNetwork::kSinkNode, net.sentinel});
    return;
  }
  net.arcs.push_back({ArcKind::kSource, CutNetwork::kSourceNode,
                      chain.first_node, net.sentinel});
  for (std::size_t k = 0; k + 1 < len; ++k) {
    net.arcs.push_back({ArcKind::kChain, chain.first_node + k,
                        chain.first_node + k + 1, capacity(k)});
  }
  net.arcs.push_back({ArcKind::kSink, chain.first_node + len - 1,
                      CutNetwork::kSinkNode, capacity(len - 1)});
}

}  // namespace

NeighborTables neighbor_tables(const Graph& h, const MinMaxOrdering& ordering) {
  require_valid(h, ordering);
  if (const auto* refl = std::get_if<ReflexiveOrdering>(&ordering)) {
    return reflexive_tables(h, refl->order);
  }
  const auto& big = std::get<BigraphOrdering>(ordering);
  return BigraphTables{side_tables(h, big.white, big.black),
                       side_tables(h, big.black, big.white)};
}

CutNetwork build_cut_network(const Graph& g, const CostTable& costs,
                             const Graph& h, const MinMaxOrdering& ordering,
                             const std::optional<Bipartition>& orientation) {
  if (!g.is_irreflexive()) {
    throw Error(ErrorCode::kProfileMismatch,
                "source graph loops must be eliminated before building the "
                "network");
  }
  if (!is_connected(h)) {
    throw Error(ErrorCode::kProfileMismatch,
                "cut network is built per connected target component");
  }
  if (costs.source_count() != g.size() || costs.target_count() != h.size()) {
    throw Error(ErrorCode::kMissingCost,
                "cost table dimensions do not match the graphs");
  }
  const NeighborTables tables = neighbor_tables(h, ordering);

  CutNetwork net;
  net.chains.resize(g.size());
  const auto* refl = std::get_if<ReflexiveOrdering>(&ordering);
  const auto* big = std::get_if<BigraphOrdering>(&ordering);
  if (refl && orientation) {
    throw Error(ErrorCode::kProfileMismatch,
                "reflexive targets take no orientation");
  }
  if (big && (!orientation || !is_valid_bipartition(g, *orientation))) {
    throw Error(ErrorCode::kProfileMismatch,
                "bigraph targets need a bipartition of the source graph");
  }

  for (VertexIndex u = 0; u < g.size(); ++u) {
    Chain& chain = net.chains[u];
    chain.first_node = net.node_count;
    if (refl) {
      chain.targets = refl->order;
    } else {
      chain.targets = orientation->side[u] == Side::kWhite ? big->white
                                                           : big->black;
    }
    net.node_count += chain.targets.size();
  }
  net.sentinel = checked_sentinel(costs, g, net.chains);
  for (VertexIndex u = 0; u < g.size(); ++u) add_chain_arcs(net, costs, u);

  auto constrain = [&](VertexIndex u, std::size_t i, VertexIndex v,
                       std::size_t target_position) {
    net.arcs.push_back({ArcKind::kConstraint, net.node(u, i),
                        net.node(v, target_position), net.sentinel});
  };

  if (refl) {
    const auto& t = std::get<ReflexiveTables>(tables);
    for (const auto& [a, b] : g.edges()) {
      for (const auto& [u, v] : {IndexEdge{a, b}, IndexEdge{b, a}}) {
        for (std::size_t i = 0; i < t.left.size(); ++i) {
          if (t.left[i] > 0) constrain(u, i, v, t.left[i]);
        }
      }
    }
  } else {
    const auto& t = std::get<BigraphTables>(tables);
    for (auto [a, b] : g.edges()) {
      if (orientation->side[a] != Side::kWhite) std::swap(a, b);
      for (std::size_t i = 0; i < t.white.left.size(); ++i) {
        if (t.white.left[i] && *t.white.left[i] > 0) {
          constrain(a, i, b, *t.white.left[i]);
        }
      }
      for (std::size_t s = 0; s < t.black.left.size(); ++s) {
        if (t.black.left[s] && *t.black.left[s] > 0) {
          constrain(b, s, a, *t.black.left[s]);
        }
      }
    }
  }
  return net;
}

MinCut min_cut(const CutNetwork& net) {
  FlowNetwork flow(net.node_count);
  for (const Arc& arc : net.arcs) flow.add_arc(arc.from, arc.to, arc.capacity);
  MinCut cut;
  cut.value = flow.max_flow(CutNetwork::kSourceNode, CutNetwork::kSinkNode);
  cut.source_side = flow.residual_reachable(CutNetwork::kSourceNode);
  return cut;
}

Homomorphism extract_homomorphism(const CutNetwork& net,
                                  const std::vector<bool>& source_side,
                                  const Graph& g, const Graph& h) {
  if (net.chains.size() != g.size() || source_side.size() != net.node_count) {
    throw Error(ErrorCode::kNonHomomorphismExtracted,
                "cut does not belong to this network");
  }
  Homomorphism f;
  f.image.reserve(g.size());
  for (VertexIndex u = 0; u < g.size(); ++u) {
    const Chain& chain = net.chains[u];
    std::optional<std::size_t> last;
    for (std::size_t k = 0; k < chain.targets.size(); ++k) {
      if (source_side[chain.first_node + k]) last = k;
    }
    if (!last) {
      throw Error(ErrorCode::kNonHomomorphismExtracted,
                  "chain of '" + g.name(u) + "' has no node on the source "
                  "side");
    }
    f.image.push_back(chain.targets[*last]);
  }
  if (!is_homomorphism(g, h, f)) {
    throw Error(ErrorCode::kNonHomomorphismExtracted,
                "minimum cut induced a mapping that is not a homomorphism");
  }
  return f;
}

std::int64_t prefix_cut_value(const CutNetwork& net,
                              const std::vector<std::size_t>& positions) {
  std::vector<bool> in_source(net.node_count, false);
  in_source[CutNetwork::kSourceNode] = true;
  for (VertexIndex u = 0; u < net.chains.size(); ++u) {
    const Chain& chain = net.chains[u];
    if (chain.targets.empty()) continue;
    for (std::size_t k = 0; k <= positions.at(u); ++k) {
      in_source[chain.first_node + k] = true;
    }
  }
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 0;
  for (const Arc& arc : net.arcs) {
    if (in_source[arc.from] && !in_source[arc.to] &&
        __builtin_add_overflow(total, arc.capacity, &total)) {
      return kMax;
    }
  }
  return total;
}

}  // namespace minhom
