#include <doctest.h>

#include <algorithm>

#include "minhom/graph.hpp"
#include "minhom/patterns.hpp"

using namespace minhom;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (VertexIndex v = 0; v < g.size(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

bool has_edge(const Graph& g, const char* a, const char* b) {
  return g.adjacent(g.require_index(a), g.require_index(b));
}

}  // namespace

TEST_CASE("obstructions are connected bipartite graphs on seven vertices") {
  for (Obstruction p : kObstructions) {
    const Graph& g = obstruction_graph(p);
    CHECK(g.size() == 7);
    CHECK(g.is_irreflexive());
    CHECK(is_connected(g));
    auto b = bipartition(g);
    REQUIRE(std::holds_alternative<Bipartition>(b));
    // x vertices on one side, y vertices on the other.
    const auto& side = std::get<Bipartition>(b).side;
    for (VertexIndex v = 0; v < 4; ++v) CHECK(side[v] == side[0]);
    for (VertexIndex v = 4; v < 7; ++v) CHECK(side[v] != side[0]);
  }
}

TEST_CASE("claw shape") {
  const Graph& g = bipartite_claw();
  CHECK(g.edge_count() == 6);
  CHECK(degrees(g) == std::vector<std::size_t>{1, 1, 1, 2, 2, 2, 3});
  CHECK(has_edge(g, "x4", "y1"));
  CHECK(has_edge(g, "x1", "y1"));
}

TEST_CASE("net shape") {
  const Graph& g = bipartite_net();
  CHECK(g.edge_count() == 7);
  for (auto [a, b] : {std::pair{"x1", "y1"}, {"x3", "y1"}, {"x4", "y1"},
                      {"x3", "y2"}, {"x4", "y2"}, {"x2", "y2"},
                      {"x4", "y3"}}) {
    CHECK(has_edge(g, a, b));
  }
}

TEST_CASE("tent shape") {
  const Graph& g = bipartite_tent();
  CHECK(g.edge_count() == 8);
  for (auto [a, b] : {std::pair{"x4", "y1"}, {"x1", "y1"}, {"x1", "y2"},
                      {"x4", "y2"}, {"x1", "y3"}, {"x2", "y3"},
                      {"x2", "y1"}, {"x3", "y1"}}) {
    CHECK(has_edge(g, a, b));
  }
}

TEST_CASE("pattern names") {
  CHECK(to_string(Obstruction::kClaw) == "bipartite_claw");
  CHECK(to_string(Obstruction::kNet) == "bipartite_net");
  CHECK(to_string(Obstruction::kTent) == "bipartite_tent");
}
