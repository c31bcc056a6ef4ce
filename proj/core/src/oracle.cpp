#include "minhom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "minhom/error.hpp"

namespace minhom {

namespace {

constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::max();

class HomomorphismSearch {
 public:
  HomomorphismSearch(const Graph& g, const CostTable& costs, const Graph& h,
                     const OracleOptions& options, std::uint64_t& nodes)
      : g_(g), costs_(costs), h_(h), options_(options), nodes_(nodes) {}

  // Optimal mapping of the component `vertices` (indices into g).
  std::optional<std::pair<std::int64_t, std::vector<VertexIndex>>> run(
      const std::vector<VertexIndex>& vertices) {
    order_ = placement_order(vertices);
    domains_.clear();
    suffix_bound_.assign(order_.size() + 1, 0);
    for (VertexIndex u : order_) {
      std::vector<std::pair<std::int64_t, VertexIndex>> domain;
      for (VertexIndex i = 0; i < h_.size(); ++i) {
        Cost c = costs_.at(u, i);
        if (c.is_infinite()) continue;
        if (g_.has_loop(u) && !h_.has_loop(i)) continue;
        domain.emplace_back(c.value(), i);
      }
      if (domain.empty()) return std::nullopt;
      std::sort(domain.begin(), domain.end());
      domains_.push_back(std::move(domain));
    }
    for (std::size_t k = order_.size(); k-- > 0;) {
      suffix_bound_[k] = suffix_bound_[k + 1] + domains_[k].front().first;
    }
    image_.assign(g_.size(), 0);
    best_cost_ = kNoBound;
    extend(0, 0);
    if (best_cost_ == kNoBound) return std::nullopt;
    return std::make_pair(best_cost_, best_image_);
  }

 private:
  // Next vertex: most already-placed neighbors, then highest degree, then
  // smallest index.
  std::vector<VertexIndex> placement_order(
      const std::vector<VertexIndex>& vertices) const {
    std::vector<VertexIndex> order;
    std::vector<bool> placed(g_.size(), false);
    std::vector<std::size_t> placed_neighbors(g_.size(), 0);
    for (std::size_t step = 0; step < vertices.size(); ++step) {
      VertexIndex pick = 0;
      bool have = false;
      for (VertexIndex v : vertices) {
        if (placed[v]) continue;
        if (!have || placed_neighbors[v] > placed_neighbors[pick] ||
            (placed_neighbors[v] == placed_neighbors[pick] &&
             g_.degree(v) > g_.degree(pick))) {
          pick = v;
          have = true;
        }
      }
      placed[pick] = true;
      order.push_back(pick);
      for (VertexIndex w : g_.neighbors(pick)) ++placed_neighbors[w];
    }
    return order;
  }

  void extend(std::size_t depth, std::int64_t cost) {
    if (++nodes_ > options_.node_limit) {
      throw Error(ErrorCode::kTooLarge,
                  "oracle search exceeded " +
                      std::to_string(options_.node_limit) + " nodes");
    }
    if (depth == order_.size()) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_image_ = image_;
      }
      return;
    }
    const VertexIndex u = order_[depth];
    for (const auto& [c, i] : domains_[depth]) {
      // Domains are sorted by cost, so the bound only tightens from here.
      if (cost + c + suffix_bound_[depth + 1] >= best_cost_) break;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const VertexIndex w = order_[k];
        if (g_.adjacent(u, w)) consistent = h_.adjacent(i, image_[w]);
      }
      if (!consistent) continue;
      image_[u] = i;
      extend(depth + 1, cost + c);
    }
  }

  const Graph& g_;
  const CostTable& costs_;
  const Graph& h_;
  const OracleOptions& options_;
  std::uint64_t& nodes_;
  std::vector<VertexIndex> order_;
  std::vector<std::vector<std::pair<std::int64_t, VertexIndex>>> domains_;
  std::vector<std::int64_t> suffix_bound_;
  std::vector<VertexIndex> image_;
  std::vector<VertexIndex> best_image_;
  std::int64_t best_cost_ = kNoBound;
};

std::size_t alpha_search(const std::vector<std::uint64_t>& adjacency,
                         std::uint64_t remaining, std::size_t taken,
                         std::size_t best) {
  if (taken + static_cast<std::size_t>(std::popcount(remaining)) <= best) {
    return best;
  }
  if (remaining == 0) return taken;
  int pick = -1;
  int pick_degree = -1;
  for (std::uint64_t rest = remaining; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int degree = std::popcount(adjacency[v] & remaining);
    if (degree > pick_degree) {
      pick = v;
      pick_degree = degree;
    }
  }
  if (pick_degree == 0) {
    return std::max(best,
                    taken + static_cast<std::size_t>(std::popcount(remaining)));
  }
  const std::uint64_t bit = std::uint64_t{1} << pick;
  best = alpha_search(adjacency, remaining & ~(adjacency[pick] | bit),
                      taken + 1, best);
  return alpha_search(adjacency, remaining & ~bit, taken, best);
}

}  // namespace

SolveResult brute_force_mch(const Graph& g, const CostTable& costs,
                            const Graph& h, const OracleOptions& options) {
  if (costs.source_count() != g.size() || costs.target_count() != h.size()) {
    throw Error(ErrorCode::kCostTableIncomplete,
                "cost table dimensions do not match the graphs");
  }
  costs.finite_total();
  std::uint64_t nodes = 0;
  HomomorphismSearch search(g, costs, h, options, nodes);
  Optimal result;
  result.hom.image.assign(g.size(), 0);
  for (const auto& component : component_vertex_sets(g)) {
    auto found = search.run(component);
    if (!found) return NoHomomorphism{};
    result.cost += found->first;
    for (VertexIndex u : component) result.hom.image[u] = found->second[u];
  }
  return result;
}

std::size_t brute_force_alpha(const Graph& g) {
  if (g.size() > kAlphaVertexLimit) {
    throw Error(ErrorCode::kTooLarge,
                "independence number oracle limited to " +
                    std::to_string(kAlphaVertexLimit) + " vertices");
  }
  std::vector<std::uint64_t> adjacency(g.size(), 0);
  for (const auto& [a, b] : g.edges()) {
    adjacency[a] |= std::uint64_t{1} << b;
    adjacency[b] |= std::uint64_t{1} << a;
  }
  const std::uint64_t all =
      g.size() == 0 ? 0 : (~std::uint64_t{0} >> (64 - g.size()));
  return alpha_search(adjacency, all, 0, 0);
}

}  // namespace minhom
