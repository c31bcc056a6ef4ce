#include "minhom/recognition.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "minhom/error.hpp"

namespace minhom {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

void require_permutation(std::span<const VertexIndex> order,
                         std::vector<VertexIndex> expected,
                         std::string_view what) {
  std::vector<VertexIndex> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  std::sort(expected.begin(), expected.end());
  if (sorted != expected) {
    throw Error(ErrorCode::kPermutationMismatch,
                std::string(what) + " does not list each vertex exactly once");
  }
}

std::vector<std::size_t> bfs_distances(const Graph& g, VertexIndex source) {
  std::vector<std::size_t> dist(g.size(), kUnreachable);
  std::queue<VertexIndex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    VertexIndex u = queue.front();
    queue.pop();
    for (VertexIndex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

// Distances from an end of a longest BFS path (double sweep from vertex 0).
std::vector<std::size_t> sweep_distances(const Graph& g) {
  auto first = bfs_distances(g, 0);
  VertexIndex far = 0;
  for (VertexIndex v = 0; v < g.size(); ++v) {
    if (first[v] != kUnreachable && first[v] > first[far]) far = v;
  }
  return bfs_distances(g, far);
}

// Vertices sharing a neighborhood (closed for reflexive graphs) are
// interchangeable in any Min-Max ordering, so the searches only ever place
// the members of a class in index order.
class TwinClasses {
 public:
  TwinClasses(const Graph& g, bool closed) : class_of_(g.size()) {
    std::map<std::vector<VertexIndex>, std::size_t> ids;
    for (VertexIndex v = 0; v < g.size(); ++v) {
      std::vector<VertexIndex> key = g.neighbors(v);
      if (closed) key.insert(std::upper_bound(key.begin(), key.end(), v), v);
      auto [it, inserted] = ids.emplace(std::move(key), members_.size());
      if (inserted) members_.emplace_back();
      class_of_[v] = it->second;
      members_[it->second].push_back(v);
    }
    next_.assign(members_.size(), 0);
  }

  bool is_next(VertexIndex v) const {
    const std::size_t c = class_of_[v];
    return members_[c][next_[c]] == v;
  }
  void place(VertexIndex v) { ++next_[class_of_[v]]; }
  void unplace(VertexIndex v) { --next_[class_of_[v]]; }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<VertexIndex>> members_;
  std::vector<std::size_t> next_;
};

class ReflexiveSearch {
 public:
  explicit ReflexiveSearch(const Graph& h)
      : h_(h), twins_(h, /*closed=*/true), placed_(h.size(), false) {}

  std::optional<std::vector<VertexIndex>> run() {
    if (extend()) return order_;
    return std::nullopt;
  }

 private:
  // Placing c after every vertex in order_ and before every unplaced vertex:
  // for each placed a with an unplaced neighbor x, the triple a < c < x needs
  // ac and cx. Checking this at every step covers every triple.
  bool feasible(VertexIndex c) const {
    for (VertexIndex a : order_) {
      for (VertexIndex x : h_.neighbors(a)) {
        if (placed_[x] || x == c) continue;
        if (!h_.adjacent(c, a) || !h_.adjacent(c, x)) return false;
      }
    }
    return true;
  }

  bool extend() {
    if (order_.size() == h_.size()) return true;
    for (VertexIndex c = 0; c < h_.size(); ++c) {
      if (placed_[c] || !twins_.is_next(c) || !feasible(c)) continue;
      placed_[c] = true;
      twins_.place(c);
      order_.push_back(c);
      if (extend()) return true;
      order_.pop_back();
      twins_.unplace(c);
      placed_[c] = false;
    }
    return false;
  }

  const Graph& h_;
  TwinClasses twins_;
  std::vector<bool> placed_;
  std::vector<VertexIndex> order_;
};

// Leftmost/rightmost neighbor positions of every vertex in `subjects`
// measured in `position` (kUnreachable for vertices not on the other side).
using Key = std::tuple<std::size_t, std::size_t, std::size_t, VertexIndex>;

Key neighbor_key(const Graph& g, VertexIndex v,
                 const std::vector<std::size_t>& position, bool closed) {
  std::size_t left = kUnreachable;
  std::size_t right = 0;
  auto visit = [&](VertexIndex w) {
    if (position[w] == kUnreachable) return;
    left = std::min(left, position[w]);
    right = std::max(right, position[w]);
  };
  if (closed) visit(v);
  for (VertexIndex w : g.neighbors(v)) visit(w);
  if (left == kUnreachable) right = kUnreachable;
  return {left, right, g.degree(v), v};
}

std::vector<VertexIndex> sort_by_keys(const Graph& g,
                                      std::vector<VertexIndex> subjects,
                                      const std::vector<std::size_t>& position,
                                      bool closed) {
  std::vector<std::pair<Key, VertexIndex>> keyed;
  keyed.reserve(subjects.size());
  for (VertexIndex v : subjects) {
    keyed.emplace_back(neighbor_key(g, v, position, closed), v);
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 0; k < keyed.size(); ++k) subjects[k] = keyed[k].second;
  return subjects;
}

std::vector<VertexIndex> sort_by_distance(std::vector<VertexIndex> subjects,
                                          const std::vector<std::size_t>& d) {
  std::stable_sort(subjects.begin(), subjects.end(),
                   [&](VertexIndex a, VertexIndex b) { return d[a] < d[b]; });
  return subjects;
}

void assign_positions(const std::vector<VertexIndex>& order,
                      std::vector<std::size_t>& position) {
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
}

std::vector<VertexIndex> refine_reflexive(const Graph& h) {
  std::vector<VertexIndex> all(h.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<VertexIndex> order = sort_by_distance(all, sweep_distances(h));
  std::vector<std::size_t> position(h.size());
  for (std::size_t round = 0; round < 2 * h.size() + 2; ++round) {
    assign_positions(order, position);
    auto next = sort_by_keys(h, order, position, /*closed=*/true);
    if (next == order) break;
    order = std::move(next);
  }
  return order;
}

// Given a white order, the black order of any valid ordering pair is the
// sort by (leftmost, rightmost) white neighbor up to twins.
std::vector<VertexIndex> derive_black_order(
    const Graph& h, const std::vector<VertexIndex>& white_order,
    const std::vector<VertexIndex>& blacks) {
  std::vector<std::size_t> position(h.size(), kUnreachable);
  assign_positions(white_order, position);
  return sort_by_keys(h, blacks, position, /*closed=*/false);
}

BigraphOrdering refine_bigraph(const Graph& h, const Bipartition& b) {
  const auto dist = sweep_distances(h);
  BigraphOrdering ord{sort_by_distance(b.white(), dist),
                      sort_by_distance(b.black(), dist)};
  std::vector<std::size_t> position(h.size(), kUnreachable);
  for (std::size_t round = 0; round < 2 * h.size() + 2; ++round) {
    auto black = derive_black_order(h, ord.white, ord.black);
    std::fill(position.begin(), position.end(), kUnreachable);
    assign_positions(black, position);
    auto white = sort_by_keys(h, ord.white, position, /*closed=*/false);
    const bool stable = white == ord.white && black == ord.black;
    ord.white = std::move(white);
    ord.black = std::move(black);
    if (stable) break;
  }
  return ord;
}

class BigraphSearch {
 public:
  BigraphSearch(const Graph& h, const Bipartition& b)
      : h_(h),
        b_(b),
        whites_(b.white()),
        blacks_(b.black()),
        twins_(h, /*closed=*/false),
        placed_(h.size(), false),
        placed_neighbors_(h.size(), 0),
        unplaced_neighbors_(h.size(), 0) {
    for (VertexIndex v : blacks_) unplaced_neighbors_[v] = h.degree(v);
  }

  std::optional<BigraphOrdering> run() {
    if (extend()) return result_;
    return std::nullopt;
  }

 private:
  // A black vertex that already has a placed white neighbor and still has an
  // unplaced one other than c must be adjacent to c, since c lands between
  // them in the white order.
  bool feasible(VertexIndex c) const {
    for (VertexIndex v : blacks_) {
      if (placed_neighbors_[v] == 0) continue;
      const bool adjacent = h_.adjacent(c, v);
      const std::size_t others = unplaced_neighbors_[v] - (adjacent ? 1 : 0);
      if (others > 0 && !adjacent) return false;
    }
    return true;
  }

  void place(VertexIndex c, int delta) {
    for (VertexIndex v : h_.neighbors(c)) {
      placed_neighbors_[v] += static_cast<std::size_t>(delta);
      unplaced_neighbors_[v] -= static_cast<std::size_t>(delta);
    }
  }

  bool extend() {
    if (white_order_.size() == whites_.size()) {
      auto black = derive_black_order(h_, white_order_, blacks_);
      if (!verify_bigraph_ordering(h_, b_, white_order_, black)) return false;
      result_ = BigraphOrdering{white_order_, std::move(black)};
      return true;
    }
    for (VertexIndex c : whites_) {
      if (placed_[c] || !twins_.is_next(c) || !feasible(c)) continue;
      placed_[c] = true;
      twins_.place(c);
      place(c, +1);
      white_order_.push_back(c);
      if (extend()) return true;
      white_order_.pop_back();
      place(c, -1);
      twins_.unplace(c);
      placed_[c] = false;
    }
    return false;
  }

  const Graph& h_;
  const Bipartition& b_;
  std::vector<VertexIndex> whites_;
  std::vector<VertexIndex> blacks_;
  TwinClasses twins_;
  std::vector<bool> placed_;
  std::vector<std::size_t> placed_neighbors_;
  std::vector<std::size_t> unplaced_neighbors_;
  std::vector<VertexIndex> white_order_;
  BigraphOrdering result_;
};

std::vector<std::string> to_names(const Graph& g,
                                  std::span<const VertexIndex> vertices) {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (VertexIndex v : vertices) out.push_back(g.name(v));
  return out;
}

std::optional<std::vector<VertexIndex>> to_indices(
    const Graph& g, const std::vector<std::string>& names) {
  std::vector<VertexIndex> out;
  out.reserve(names.size());
  for (const auto& n : names) {
    auto idx = g.index_of(n);
    if (!idx) return std::nullopt;
    out.push_back(*idx);
  }
  return out;
}

bool is_odd_cycle(const Graph& g, std::span<const VertexIndex> cycle) {
  if (cycle.size() == 1) return g.has_loop(cycle[0]);
  if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
  std::vector<VertexIndex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    if (!g.adjacent(cycle[k], cycle[(k + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace

Bipartition BigraphOrdering::bipartition(std::size_t vertex_count) const {
  Bipartition b;
  b.side.assign(vertex_count, Side::kWhite);
  std::vector<int> seen(vertex_count, 0);
  auto mark = [&](VertexIndex v, Side s) {
    if (v >= vertex_count || seen[v]++ > 0) {
      throw Error(ErrorCode::kPermutationMismatch,
                  "bigraph ordering lists a vertex twice or out of range");
    }
    b.side[v] = s;
  };
  for (VertexIndex v : white) mark(v, Side::kWhite);
  for (VertexIndex v : black) mark(v, Side::kBlack);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw Error(ErrorCode::kPermutationMismatch,
                "bigraph ordering misses a vertex");
  }
  return b;
}

bool verify_reflexive_ordering(const Graph& h,
                               std::span<const VertexIndex> order) {
  if (!h.is_reflexive()) {
    throw Error(ErrorCode::kNotReflexive, "reflexive ordering on a graph "
                                          "with unlooped vertices");
  }
  std::vector<VertexIndex> all(h.size());
  std::iota(all.begin(), all.end(), 0);
  require_permutation(order, std::move(all), "reflexive ordering");
  const std::size_t p = order.size();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = i + 2; k < p; ++k) {
      if (!h.adjacent(order[i], order[k])) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!h.adjacent(order[i], order[j]) ||
            !h.adjacent(order[j], order[k])) {
          return false;
        }
      }
    }
  }
  return true;
}

bool verify_bigraph_ordering(const Graph& h, const Bipartition& b,
                             std::span<const VertexIndex> white_order,
                             std::span<const VertexIndex> black_order) {
  if (!is_valid_bipartition(h, b)) {
    throw Error(ErrorCode::kNotBipartite,
                "coloring is not a bipartition of the graph");
  }
  require_permutation(white_order, b.white(), "white ordering");
  require_permutation(black_order, b.black(), "black ordering");
  const std::size_t p = white_order.size();
  const std::size_t q = black_order.size();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      for (std::size_t s = 0; s < q; ++s) {
        if (!h.adjacent(white_order[j], black_order[s])) continue;
        for (std::size_t r = s + 1; r < q; ++r) {
          if (!h.adjacent(white_order[i], black_order[r])) continue;
          if (!h.adjacent(white_order[i], black_order[s]) ||
              !h.adjacent(white_order[j], black_order[r])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool verify_ordering(const Graph& h, const MinMaxOrdering& ordering) {
  if (const auto* refl = std::get_if<ReflexiveOrdering>(&ordering)) {
    return verify_reflexive_ordering(h, refl->order);
  }
  const auto& big = std::get<BigraphOrdering>(ordering);
  return verify_bigraph_ordering(h, big.bipartition(h.size()), big.white,
                                 big.black);
}

std::optional<MinMaxOrdering> find_ordering(const Graph& h) {
  if (h.empty()) return ReflexiveOrdering{};
  const LoopProfile profile = loop_profile(h);

  if (profile.kind == LoopKind::kReflexive) {
    auto order = refine_reflexive(h);
    if (verify_reflexive_ordering(h, order)) return ReflexiveOrdering{order};
    auto found = ReflexiveSearch(h).run();
    if (!found) return std::nullopt;
    if (!verify_reflexive_ordering(h, *found)) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "exhaustive search produced an invalid reflexive ordering");
    }
    return ReflexiveOrdering{std::move(*found)};
  }

  if (profile.kind == LoopKind::kIrreflexive) {
    auto coloring = bipartition(h);
    if (!std::holds_alternative<Bipartition>(coloring)) {
      throw Error(ErrorCode::kUnsupportedProfile,
                  "irreflexive graph is not bipartite");
    }
    const auto& b = std::get<Bipartition>(coloring);
    auto ord = refine_bigraph(h, b);
    if (verify_bigraph_ordering(h, b, ord.white, ord.black)) return ord;
    // The search verifies every candidate before accepting it.
    if (auto found = BigraphSearch(h, b).run()) return *found;
    return std::nullopt;
  }

  throw Error(ErrorCode::kUnsupportedProfile,
              "graph mixes looped and unlooped vertices");
}

bool operator==(const ReflexiveViaDouble& a, const ReflexiveViaDouble& b) {
  if (!a.inner || !b.inner) return a.inner == b.inner;
  return *a.inner == *b.inner;
}

std::string_view NpcCertificate::kind() const {
  struct Visitor {
    std::string_view operator()(const MixedLoopEdge&) const {
      return "mixed_loop_edge";
    }
    std::string_view operator()(const NonBipartiteComponent&) const {
      return "non_bipartite_component";
    }
    std::string_view operator()(const LongInducedCycle&) const {
      return "long_induced_cycle";
    }
    std::string_view operator()(const ObstructionEmbedding& e) const {
      return to_string(e.pattern);
    }
    std::string_view operator()(const ReflexiveViaDouble&) const {
      return "reflexive_via_double";
    }
  };
  return std::visit(Visitor{}, witness);
}

bool check_certificate(const Graph& component, const NpcCertificate& cert) {
  if (const auto* mixed = std::get_if<MixedLoopEdge>(&cert.witness)) {
    auto r = component.index_of(mixed->looped);
    auto s = component.index_of(mixed->unlooped);
    return r && s && *r != *s && component.adjacent(*r, *s) &&
           component.has_loop(*r) && !component.has_loop(*s);
  }
  if (const auto* odd = std::get_if<NonBipartiteComponent>(&cert.witness)) {
    auto cycle = to_indices(component, odd->cycle);
    return cycle && is_odd_cycle(component, *cycle);
  }
  if (const auto* longc = std::get_if<LongInducedCycle>(&cert.witness)) {
    auto cycle = to_indices(component, longc->cycle);
    return cycle && cycle->size() >= 6 && component.is_irreflexive() &&
           is_induced_cycle(component, *cycle);
  }
  if (const auto* emb = std::get_if<ObstructionEmbedding>(&cert.witness)) {
    auto image = to_indices(component, emb->image);
    return image && is_induced_embedding(component,
                                         obstruction_graph(emb->pattern),
                                         InducedEmbedding{*image});
  }
  const auto& via = std::get<ReflexiveViaDouble>(cert.witness);
  if (!via.inner || component.empty() || !component.is_reflexive()) {
    return false;
  }
  return check_certificate(bipartite_double(component), *via.inner);
}

NpcCertificate find_forbidden_structure(const Graph& h) {
  if (!h.is_irreflexive() ||
      !std::holds_alternative<Bipartition>(bipartition(h))) {
    throw Error(ErrorCode::kUnsupportedProfile,
                "forbidden structures are searched in irreflexive bipartite "
                "graphs only");
  }
  for (Obstruction pattern : kObstructions) {
    if (auto emb = find_induced_embedding(h, obstruction_graph(pattern))) {
      return {ObstructionEmbedding{pattern, to_names(h, emb->image)}};
    }
  }
  for (std::size_t length = 6; length <= h.size(); length += 2) {
    if (auto cycle = find_induced_cycle(h, length)) {
      return {LongInducedCycle{to_names(h, *cycle)}};
    }
  }
  throw Error(ErrorCode::kInternalInconsistency,
              "no claw, net, tent or long induced cycle in a graph without a "
              "Min-Max ordering");
}

namespace {

std::variant<MinMaxOrdering, NpcCertificate> classify_component(
    const Graph& comp) {
  const LoopProfile profile = loop_profile(comp);
  switch (profile.kind) {
    case LoopKind::kMixed: {
      const auto [r, s] = *profile.witness;
      return NpcCertificate{MixedLoopEdge{comp.name(r), comp.name(s)}};
    }
    case LoopKind::kMixedNoWitness:
      throw Error(ErrorCode::kInternalInconsistency,
                  "connected component with loops and non-loops but no mixed "
                  "edge");
    case LoopKind::kIrreflexive: {
      auto coloring = bipartition(comp);
      if (auto* odd = std::get_if<OddCycleWitness>(&coloring)) {
        return NpcCertificate{
            NonBipartiteComponent{to_names(comp, odd->cycle)}};
      }
      if (auto ord = find_ordering(comp)) return *ord;
      return find_forbidden_structure(comp);
    }
    case LoopKind::kReflexive: {
      if (auto ord = find_ordering(comp)) return *ord;
      auto inner = find_forbidden_structure(bipartite_double(comp));
      return NpcCertificate{ReflexiveViaDouble{
          std::make_shared<const NpcCertificate>(std::move(inner))}};
    }
  }
  throw Error(ErrorCode::kInternalInconsistency, "unknown loop profile");
}

}  // namespace

bool Classification::is_poly() const {
  return std::all_of(components.begin(), components.end(),
                     [](const ComponentVerdict& c) { return c.is_poly(); });
}

std::vector<MinMaxOrdering> Classification::orderings() const {
  std::vector<MinMaxOrdering> out;
  if (!is_poly()) return out;
  for (const auto& c : components) {
    out.push_back(std::get<MinMaxOrdering>(c.verdict));
  }
  return out;
}

const NpcCertificate* Classification::certificate() const {
  for (const auto& c : components) {
    if (const auto* cert = std::get_if<NpcCertificate>(&c.verdict)) {
      return cert;
    }
  }
  return nullptr;
}

Classification classify(const Graph& h) {
  Classification out;
  for (const auto& set : component_vertex_sets(h)) {
    Graph comp = h.induced(set);
    auto verdict = classify_component(comp);
    if (const auto* cert = std::get_if<NpcCertificate>(&verdict);
        cert && !check_certificate(comp, *cert)) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "generated certificate failed its own check");
    }
    out.components.push_back({std::move(comp), std::move(verdict)});
  }
  return out;
}

}  // namespace minhom
