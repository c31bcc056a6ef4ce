#include <doctest.h>

#include <algorithm>
#include <set>

#include "brute.hpp"
#include "fixtures.hpp"
#include "minhom/error.hpp"
#include "minhom/generators.hpp"
#include "minhom/graph.hpp"
#include "minhom/patterns.hpp"

using namespace minhom;
using namespace minhom::testing;

TEST_CASE("vertices are sorted and loops kept apart from edges") {
  Graph g = make_graph({"c", "a", "b"}, {{"c", "a"}, {"b", "b"}});
  CHECK(g.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.edge_count() == 1);
  CHECK(g.has_loop(1));
  CHECK(g.adjacent(1, 1));
  CHECK_FALSE(g.adjacent(0, 0));
  CHECK(g.edges() == std::vector<IndexEdge>{{0, 2}});
  CHECK(g.loop_vertices() == std::vector<VertexIndex>{1});
}

TEST_CASE("duplicate edges collapse") {
  Graph g = make_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 1);
}

TEST_CASE("malformed graphs are rejected") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternalInconsistency;
  };
  CHECK(code_of([] { make_graph({"a", "a"}, {}); }) ==
        ErrorCode::kInvalidGraph);
  CHECK(code_of([] { make_graph({"a"}, {{"a", "b"}}); }) ==
        ErrorCode::kInvalidGraph);
  CHECK(code_of([] { make_graph({"a"}, {}, {"z"}); }) ==
        ErrorCode::kInvalidGraph);
}

TEST_CASE("connected components") {
  CHECK(connected_components(Graph()).empty());
  Graph two = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].names() == std::vector<std::string>{"a", "b"});
  CHECK(comps[1].names() == std::vector<std::string>{"c", "d"});
  CHECK(connected_components(path_graph(3)).size() == 1);
}

TEST_CASE("components partition vertices, edges and loops") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = with_random_loops(random_graph(9, 0.2, rng), 0.3, rng);
    std::size_t vertices = 0, edges = 0, loops = 0;
    std::set<std::string> seen;
    for (const Graph& c : connected_components(g)) {
      CHECK(is_connected(c));
      vertices += c.size();
      edges += c.edge_count();
      loops += c.loop_count();
      for (const auto& n : c.names()) seen.insert(n);
    }
    CHECK(vertices == g.size());
    CHECK(edges == g.edge_count());
    CHECK(loops == g.loop_count());
    CHECK(seen.size() == g.size());
  }
}

TEST_CASE("bipartition of a path colors the smallest vertex white") {
  auto result = bipartition(make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  auto* b = std::get_if<Bipartition>(&result);
  REQUIRE(b);
  CHECK(b->white() == std::vector<VertexIndex>{0, 2});
  CHECK(b->black() == std::vector<VertexIndex>{1});
}

TEST_CASE("bipartition witnesses") {
  auto tri = bipartition(complete_graph(3));
  auto* odd = std::get_if<OddCycleWitness>(&tri);
  REQUIRE(odd);
  CHECK(odd->cycle.size() == 3);

  auto looped = bipartition(make_graph({"v"}, {}, {"v"}));
  auto* loop = std::get_if<OddCycleWitness>(&looped);
  REQUIRE(loop);
  CHECK(loop->is_loop());
}

TEST_CASE("bipartition agrees with parity reachability") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = with_random_loops(random_graph(8, 0.25, rng), 0.05, rng);
    auto result = bipartition(g);
    const bool bipartite = std::holds_alternative<Bipartition>(result);
    CHECK(bipartite == !has_odd_cycle_or_loop(g));
    if (bipartite) {
      CHECK(is_valid_bipartition(g, std::get<Bipartition>(result)));
    } else {
      const auto& cycle = std::get<OddCycleWitness>(result).cycle;
      CHECK(cycle.size() % 2 == 1);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        CHECK(g.adjacent(cycle[k], cycle[(k + 1) % cycle.size()]));
      }
    }
  }
}

TEST_CASE("loop profiles") {
  CHECK(loop_profile(reflexive_k2()).kind == LoopKind::kReflexive);
  CHECK(loop_profile(path_graph(3)).kind == LoopKind::kIrreflexive);
  Graph rs = make_graph({"r", "s"}, {{"r", "s"}}, {"r"});
  LoopProfile p = loop_profile(rs);
  CHECK(p.kind == LoopKind::kMixed);
  REQUIRE(p.witness);
  CHECK(rs.name(p.witness->first) == "r");
  CHECK(rs.name(p.witness->second) == "s");
  Graph apart = make_graph({"r", "s"}, {}, {"r"});
  CHECK(loop_profile(apart).kind == LoopKind::kMixedNoWitness);
}

TEST_CASE("bipartite double of small reflexive graphs") {
  Graph single = bipartite_double(make_graph({"v"}, {}, {"v"}));
  CHECK(single.size() == 2);
  CHECK(single.edge_count() == 1);
  CHECK(single.adjacent(single.require_index("v'"), single.require_index("v''")));

  Graph k2 = bipartite_double(reflexive_k2());
  CHECK(k2.size() == 4);
  CHECK(k2.edge_count() == 4);
  for (const auto& [a, b] : std::vector<NamedEdge>{{"w1'", "w1''"},
                                                    {"w2'", "w2''"},
                                                    {"w1'", "w2''"},
                                                    {"w2'", "w1''"}}) {
    CHECK(k2.adjacent(k2.require_index(a), k2.require_index(b)));
  }

  Graph p3 = bipartite_double(reflexive_p3());
  CHECK(p3.size() == 6);
  CHECK(p3.edge_count() == 7);

  CHECK_THROWS_AS(bipartite_double(path_graph(2)), Error);
}

TEST_CASE("bipartite double counts") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Graph h = reflexive_closure(random_graph(7, 0.4, rng));
    Graph d = bipartite_double(h);
    CHECK(d.size() == 2 * h.size());
    CHECK(d.edge_count() == h.size() + 2 * h.edge_count());
    CHECK(d.is_irreflexive());
    CHECK(std::holds_alternative<Bipartition>(bipartition(d)));
  }
}

TEST_CASE("induced embeddings") {
  Graph c6 = cycle_graph(6);
  auto e = find_induced_embedding(c6, path_graph(3));
  REQUIRE(e);
  CHECK(is_induced_embedding(c6, path_graph(3), *e));
  CHECK_FALSE(find_induced_embedding(cycle_graph(4), bipartite_claw()));
  auto self = find_induced_embedding(bipartite_claw(), bipartite_claw());
  REQUIRE(self);
  CHECK(is_induced_embedding(bipartite_claw(), bipartite_claw(), *self));
}

TEST_CASE("induced embedding search agrees with brute force") {
  Rng rng(3);
  const Graph patterns[] = {path_graph(3), path_graph(4), cycle_graph(4),
                            complete_bipartite(1, 3)};
  for (int trial = 0; trial < 60; ++trial) {
    Graph host = random_graph(7, 0.35, rng);
    for (const Graph& pattern : patterns) {
      auto found = find_induced_embedding(host, pattern);
      CHECK(found.has_value() == has_induced_copy(host, pattern));
      if (found) CHECK(is_induced_embedding(host, pattern, *found));
    }
  }
}

TEST_CASE("induced cycles") {
  Graph c6 = cycle_graph(6);
  auto cycle = find_induced_cycle(c6, 6);
  REQUIRE(cycle);
  CHECK(cycle->front() == 0);
  CHECK(is_induced_cycle(c6, *cycle));
  CHECK_FALSE(find_induced_cycle(c6, 4));
  // A chord kills the induced 6-cycle but creates two 4-cycles.
  Graph chord = make_graph(c6.names(), {{"c1", "c2"}, {"c2", "c3"}, {"c3", "c4"},
                                         {"c4", "c5"}, {"c5", "c6"}, {"c6", "c1"},
                                         {"c1", "c4"}});
  CHECK_FALSE(find_induced_cycle(chord, 6));
  CHECK(find_induced_cycle(chord, 4));
}

TEST_CASE("induced cycle search agrees with brute force") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Graph host = random_graph(7, 0.4, rng);
    for (std::size_t len : {4u, 5u, 6u}) {
      auto found = find_induced_cycle(host, len);
      CHECK(found.has_value() == has_induced_copy(host, cycle_graph(len)));
      if (found) {
        CHECK(found->size() == len);
        CHECK(is_induced_cycle(host, *found));
      }
    }
  }
}
