#include "minhom/solver.hpp"

#include <optional>
#include <vector>

#include "minhom/error.hpp"

namespace minhom {

namespace {

struct Candidate {
  std::int64_t cost = 0;
  Homomorphism local;  // component-local indices
};

std::optional<Candidate> solve_network(
    const Graph& gj, const CostTable& costs, const Graph& hi,
    const MinMaxOrdering& ordering,
    const std::optional<Bipartition>& orientation) {
  CutNetwork net = build_cut_network(gj, costs, hi, ordering, orientation);
  MinCut cut = min_cut(net);
  if (cut.value >= net.sentinel) return std::nullopt;
  Homomorphism f = extract_homomorphism(net, cut.source_side, gj, hi);
  if (homomorphism_cost(costs, f) != cut.value) {
    throw Error(ErrorCode::kInternalInconsistency,
                "extracted homomorphism cost differs from the cut value");
  }
  return Candidate{cut.value, std::move(f)};
}

}  // namespace

SolveResult solve(const Graph& g, const CostTable& costs, const Graph& h) {
  if (costs.source_count() != g.size() || costs.target_count() != h.size()) {
    throw Error(ErrorCode::kCostTableIncomplete,
                "cost table dimensions do not match the graphs");
  }
  return solve(g, costs, h, classify(h));
}

SolveResult solve(const Graph& g, const CostTable& costs, const Graph& h,
                  const Classification& classification) {
  if (costs.source_count() != g.size() || costs.target_count() != h.size()) {
    throw Error(ErrorCode::kCostTableIncomplete,
                "cost table dimensions do not match the graphs");
  }
  costs.finite_total();
  if (const NpcCertificate* cert = classification.certificate()) {
    return NpcTarget{*cert};
  }

  CostTable adjusted = costs;
  for (VertexIndex u : g.loop_vertices()) {
    for (VertexIndex i = 0; i < h.size(); ++i) {
      if (!h.has_loop(i)) adjusted.set(u, i, Cost::infinite());
    }
  }
  const Graph loopless = g.without_loops();

  struct TargetComponent {
    const Graph* graph;
    const MinMaxOrdering* ordering;
    std::vector<VertexIndex> vertices;  // indices in h
  };
  std::vector<TargetComponent> targets;
  for (const auto& verdict : classification.components) {
    TargetComponent t{&verdict.component,
                      &std::get<MinMaxOrdering>(verdict.verdict),
                      {}};
    for (const auto& name : verdict.component.names()) {
      t.vertices.push_back(h.require_index(name));
    }
    targets.push_back(std::move(t));
  }

  Homomorphism assembled;
  assembled.image.assign(g.size(), 0);
  std::int64_t total = 0;
  for (const auto& sources : component_vertex_sets(loopless)) {
    const Graph gj = loopless.induced(sources);
    const auto coloring = bipartition(gj);
    const auto* gj_bipartition = std::get_if<Bipartition>(&coloring);

    std::optional<Candidate> best;
    const TargetComponent* best_target = nullptr;
    auto consider = [&](std::optional<Candidate> c, const TargetComponent& t) {
      if (c && (!best || c->cost < best->cost)) {
        best = std::move(c);
        best_target = &t;
      }
    };
    for (const auto& t : targets) {
      const CostTable local = adjusted.restricted(sources, t.vertices);
      if (std::holds_alternative<ReflexiveOrdering>(*t.ordering)) {
        consider(solve_network(gj, local, *t.graph, *t.ordering, std::nullopt),
                 t);
      } else if (gj_bipartition) {
        // A connected bipartite source has exactly two colorings.
        consider(solve_network(gj, local, *t.graph, *t.ordering,
                               *gj_bipartition),
                 t);
        consider(solve_network(gj, local, *t.graph, *t.ordering,
                               gj_bipartition->swapped()),
                 t);
      }
    }
    if (!best) return NoHomomorphism{};
    total += best->cost;
    for (std::size_t k = 0; k < sources.size(); ++k) {
      assembled.image[sources[k]] = best_target->vertices[best->local.image[k]];
    }
  }

  if (!is_homomorphism(g, h, assembled) ||
      homomorphism_cost(costs, assembled) != total) {
    throw Error(ErrorCode::kInternalInconsistency,
                "assembled homomorphism failed end-to-end validation");
  }
  return Optimal{total, std::move(assembled)};
}

}  // namespace minhom
