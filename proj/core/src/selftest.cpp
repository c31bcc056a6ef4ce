#include "minhom/selftest.hpp"

#include <functional>

#include "minhom/error.hpp"
#include "minhom/generators.hpp"
#include "minhom/intervals.hpp"
#include "minhom/oracle.hpp"
#include "minhom/patterns.hpp"
#include "minhom/recognition.hpp"
#include "minhom/reductions.hpp"
#include "minhom/solver.hpp"

namespace minhom {

namespace {

Graph named(std::vector<std::string> v, std::vector<NamedEdge> e,
            std::vector<std::string> loops = {}) {
  return Graph(std::move(v), e, loops);
}

std::optional<std::int64_t> cost_of(const SolveResult& r) {
  if (const auto* opt = std::get_if<Optimal>(&r)) return opt->cost;
  return std::nullopt;
}

// Returns an empty string on success, otherwise a description.
std::string check_catalog() {
  const Graph c4 = named({"a", "b", "c", "d"},
                         {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  const Graph path = reflexive_closure(
      named({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
  const Graph k3 = named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  const Graph mixed = named({"r", "s"}, {{"r", "s"}}, {"r"});
  for (const Graph* g : {&c4, &path}) {
    Classification c = classify(*g);
    if (!c.is_poly()) return "expected a polynomial verdict";
    for (std::size_t k = 0; k < c.components.size(); ++k) {
      if (!verify_ordering(c.components[k].component, c.orderings()[k])) {
        return "ordering failed its verifier";
      }
    }
  }
  std::vector<Graph> hard = {k3, mixed};
  for (Obstruction p : kObstructions) hard.push_back(obstruction_graph(p));
  for (const Graph& g : hard) {
    Classification c = classify(g);
    if (c.is_poly()) return "expected an NP-complete verdict";
  }
  return {};
}

std::string check_solver(Rng& rng) {
  for (int trial = 0; trial < 60; ++trial) {
    const bool reflexive = trial % 2 == 0;
    std::uniform_int_distribution<std::size_t> size(1, 5);
    Graph h = reflexive ? random_proper_interval_graph(size(rng), rng)
                        : random_proper_interval_bigraph(size(rng), size(rng),
                                                         rng);
    Graph g = with_random_loops(random_graph(size(rng) + 1, 0.4, rng), 0.2, rng);
    CostTable costs = random_costs(g.size(), h.size(), 10, 0.05, rng);
    if (cost_of(solve(g, costs, h)) != cost_of(brute_force_mch(g, costs, h))) {
      return "solver and oracle disagree on trial " + std::to_string(trial);
    }
  }
  return {};
}

std::string check_intervals(Rng& rng) {
  for (int trial = 0; trial < 40; ++trial) {
    Graph h = trial % 2 == 0 ? random_proper_interval_graph(6, rng)
                             : random_proper_interval_bigraph(3, 4, rng);
    for (const auto& verdict : classify(h).components) {
      const auto& ordering = std::get<MinMaxOrdering>(verdict.verdict);
      IntervalRep rep = ordering_to_intervals(verdict.component, ordering);
      if (!verify_representation(verdict.component, rep) ||
          !verify_ordering(verdict.component,
                           intervals_to_ordering(verdict.component, rep))) {
        return "interval round trip failed";
      }
    }
  }
  return {};
}

std::string check_gadgets(Rng& rng) {
  for (int trial = 0; trial < 15; ++trial) {
    ThreePartiteGraph g = random_three_partite(5, 0.5, rng);
    const auto alpha = static_cast<std::int64_t>(brute_force_alpha(g.graph));
    for (GadgetKind kind :
         {GadgetKind::kClaw, GadgetKind::kNet, GadgetKind::kTent}) {
      GadgetInstance inst = gadget_build(g, kind);
      auto mch = cost_of(brute_force_mch(inst.gstar, inst.costs, inst.target));
      if (!mch || recover_alpha(inst, *mch) != alpha) {
        return std::string(to_string(kind)) + " gadget formula failed";
      }
    }
  }
  return {};
}

std::string check_double(Rng& rng) {
  for (int trial = 0; trial < 40; ++trial) {
    Graph h = reflexive_closure(random_graph(5, 0.5, rng));
    for (const Graph& c : connected_components(h)) {
      if (find_ordering(c).has_value() !=
          find_ordering(bipartite_double(c)).has_value()) {
        return "bipartite double disagrees on a " +
               std::to_string(c.size()) + "-vertex component";
      }
    }
  }
  return {};
}

}  // namespace

bool SelftestReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

SelftestReport run_selftest(std::uint64_t seed) {
  Rng rng(seed);
  const std::pair<const char*, std::function<std::string()>> suite[] = {
      {"catalog", [] { return check_catalog(); }},
      {"solver_vs_oracle", [&] { return check_solver(rng); }},
      {"interval_round_trip", [&] { return check_intervals(rng); }},
      {"gadget_formulas", [&] { return check_gadgets(rng); }},
      {"bipartite_double", [&] { return check_double(rng); }},
  };
  SelftestReport report;
  for (const auto& [name, run] : suite) {
    SelftestCheck check{name, false, {}};
    try {
      check.detail = run();
      check.passed = check.detail.empty();
    } catch (const Error& e) {
      check.detail = e.what();
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace minhom
