#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "brute.hpp"
#include "fixtures.hpp"
#include "minhom/error.hpp"
#include "minhom/generators.hpp"
#include "minhom/patterns.hpp"
#include "minhom/recognition.hpp"

using namespace minhom;
using namespace minhom::testing;

namespace {

std::vector<VertexIndex> ids(std::initializer_list<VertexIndex> v) {
  return v;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::kInternalInconsistency;
}

Bipartition coloring(const Graph& g) {
  return std::get<Bipartition>(bipartition(g));
}

}  // namespace

TEST_CASE("reflexive verifier examples") {
  Graph p3 = reflexive_p3();
  CHECK(verify_reflexive_ordering(p3, indices(p3, {"a", "b", "c"})));
  CHECK_FALSE(verify_reflexive_ordering(p3, indices(p3, {"a", "c", "b"})));

  Graph star = loop_all(complete_bipartite(1, 3));
  std::vector<VertexIndex> order(4);
  std::iota(order.begin(), order.end(), VertexIndex{0});
  do {
    CHECK_FALSE(verify_reflexive_ordering(star, order));
  } while (std::next_permutation(order.begin(), order.end()));

  Graph k3 = loop_all(complete_graph(3));
  std::iota(order.begin(), order.begin() + 3, VertexIndex{0});
  std::vector<VertexIndex> three(order.begin(), order.begin() + 3);
  do {
    CHECK(verify_reflexive_ordering(k3, three));
  } while (std::next_permutation(three.begin(), three.end()));
}

TEST_CASE("reflexive verifier errors") {
  Graph p3 = reflexive_p3();
  CHECK(code_of([&] { verify_reflexive_ordering(path_graph(3), ids({0, 1, 2})); }) ==
        ErrorCode::kNotReflexive);
  CHECK(code_of([&] { verify_reflexive_ordering(p3, ids({0, 1})); }) ==
        ErrorCode::kPermutationMismatch);
  CHECK(code_of([&] { verify_reflexive_ordering(p3, ids({0, 1, 1})); }) ==
        ErrorCode::kPermutationMismatch);
}

TEST_CASE("bigraph verifier examples") {
  Graph p4 = p4_bigraph();
  Bipartition b = coloring(p4);
  CHECK(verify_bigraph_ordering(p4, b, indices(p4, {"u1", "u2"}),
                                indices(p4, {"v1", "v2"})));

  Graph c6 = cycle_graph(6);
  Bipartition bc = coloring(c6);
  auto white = bc.white(), black = bc.black();
  do {
    std::sort(black.begin(), black.end());
    do {
      CHECK_FALSE(verify_bigraph_ordering(c6, bc, white, black));
    } while (std::next_permutation(black.begin(), black.end()));
  } while (std::next_permutation(white.begin(), white.end()));

  Graph k22 = complete_bipartite(2, 2);
  CHECK(verify_bigraph_ordering(k22, coloring(k22), ids({1, 0}), ids({2, 3})));
}

TEST_CASE("bigraph verifier errors") {
  Graph p4 = p4_bigraph();
  Bipartition bad = coloring(p4);
  std::swap(bad.side[0], bad.side[2]);
  CHECK(code_of([&] {
          verify_bigraph_ordering(p4, bad, bad.white(), bad.black());
        }) == ErrorCode::kNotBipartite);
  Bipartition b = coloring(p4);
  CHECK(code_of([&] { verify_bigraph_ordering(p4, b, ids({0}), b.black()); }) ==
        ErrorCode::kPermutationMismatch);
  CHECK(code_of([&] { verify_bigraph_ordering(p4, b, b.black(), b.white()); }) ==
        ErrorCode::kPermutationMismatch);
}

TEST_CASE("verifiers agree with the direct condition on random orders") {
  Rng rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    Graph h = reflexive_closure(random_graph(6, 0.5, rng));
    std::vector<VertexIndex> order(h.size());
    std::iota(order.begin(), order.end(), VertexIndex{0});
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(verify_reflexive_ordering(h, order) == umbrella_holds(h, order));

    Graph g = random_proper_interval_bigraph(3, 4, rng);
    auto col = bipartition(g);
    REQUIRE(std::holds_alternative<Bipartition>(col));
    auto white = std::get<Bipartition>(col).white();
    auto black = std::get<Bipartition>(col).black();
    std::shuffle(white.begin(), white.end(), rng);
    std::shuffle(black.begin(), black.end(), rng);
    CHECK(verify_bigraph_ordering(g, std::get<Bipartition>(col), white, black) ==
          min_max_holds(g, white, black));
  }
}

TEST_CASE("find_ordering examples") {
  Graph p5 = loop_all(path_graph(5));
  auto o = find_ordering(p5);
  REQUIRE(o);
  CHECK(verify_ordering(p5, *o));

  CHECK_FALSE(find_ordering(bipartite_claw()));

  Graph c4 = cycle_graph(4);
  auto oc = find_ordering(c4);
  REQUIRE(oc);
  CHECK(std::holds_alternative<BigraphOrdering>(*oc));
  CHECK(verify_ordering(c4, *oc));

  CHECK(code_of([] { find_ordering(complete_graph(3)); }) ==
        ErrorCode::kUnsupportedProfile);
  CHECK(code_of([] {
          find_ordering(make_graph({"r", "s"}, {{"r", "s"}}, {"r"}));
        }) == ErrorCode::kUnsupportedProfile);
}

TEST_CASE("find_ordering is exact on small reflexive graphs") {
  Rng rng(41);
  int positive = 0, negative = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> n(1, 7);
    Graph h = reflexive_closure(random_graph(n(rng), 0.55, rng));
    for (const Graph& c : connected_components(h)) {
      auto found = find_ordering(c);
      const bool truth = has_umbrella_order(c);
      CHECK(found.has_value() == truth);
      if (found) CHECK(umbrella_holds(c, std::get<ReflexiveOrdering>(*found).order));
      (truth ? positive : negative)++;
    }
  }
  CHECK(positive > 0);
  CHECK(negative > 0);
}

TEST_CASE("find_ordering is exact on small bipartite graphs") {
  Rng rng(43);
  int positive = 0, negative = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<std::size_t> n(2, 7);
    Graph h = random_graph(n(rng), 0.45, rng);
    if (!std::holds_alternative<Bipartition>(bipartition(h))) continue;
    for (const Graph& c : connected_components(h)) {
      auto found = find_ordering(c);
      const bool truth = has_min_max_order(c);
      CHECK(found.has_value() == truth);
      if (found) {
        const auto& o = std::get<BigraphOrdering>(*found);
        CHECK(min_max_holds(c, o.white, o.black));
      }
      (truth ? positive : negative)++;
    }
  }
  for (const Graph& c : {cycle_graph(6), bipartite_claw(), bipartite_tent()}) {
    CHECK_FALSE(find_ordering(c).has_value());
    CHECK_FALSE(has_min_max_order(c));
    ++negative;
  }
  CHECK(positive > 0);
  CHECK(negative > 0);
}

TEST_CASE("find_ordering recovers hidden orders of larger targets") {
  Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    Graph r = random_proper_interval_graph(14, rng);
    for (const Graph& c : connected_components(r)) {
      auto o = find_ordering(c);
      REQUIRE(o);
      CHECK(verify_ordering(c, *o));
    }
    Graph b = random_proper_interval_bigraph(7, 8, rng);
    for (const Graph& c : connected_components(b)) {
      auto o = find_ordering(c);
      REQUIRE(o);
      CHECK(verify_ordering(c, *o));
    }
  }
}

TEST_CASE("forbidden structures") {
  NpcCertificate c6 = find_forbidden_structure(cycle_graph(6));
  auto* cycle = std::get_if<LongInducedCycle>(&c6.witness);
  REQUIRE(cycle);
  CHECK(cycle->cycle.size() == 6);
  CHECK(check_certificate(cycle_graph(6), c6));

  NpcCertificate net = find_forbidden_structure(bipartite_net());
  auto* e = std::get_if<ObstructionEmbedding>(&net.witness);
  REQUIRE(e);
  CHECK(e->pattern == Obstruction::kNet);
  CHECK(e->image == bipartite_net().names());

  // Claw with an extra pendant edge at x1.
  Graph claw = bipartite_claw();
  std::vector<std::string> names = claw.names();
  names.push_back("z");
  std::vector<NamedEdge> edges;
  for (const auto& [a, b] : claw.edges()) edges.emplace_back(claw.name(a), claw.name(b));
  edges.emplace_back("x1", "z");
  Graph bigger(names, edges);
  NpcCertificate cert = find_forbidden_structure(bigger);
  auto* ce = std::get_if<ObstructionEmbedding>(&cert.witness);
  REQUIRE(ce);
  CHECK(ce->pattern == Obstruction::kClaw);
  CHECK(check_certificate(bigger, cert));
}

TEST_CASE("forbidden structure exists exactly when no ordering does") {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    Graph h = random_graph(8, 0.3, rng);
    if (!std::holds_alternative<Bipartition>(bipartition(h))) continue;
    for (const Graph& c : connected_components(h)) {
      if (find_ordering(c)) continue;
      NpcCertificate cert = find_forbidden_structure(c);
      CHECK(check_certificate(c, cert));
    }
  }
}

TEST_CASE("tampered certificates are rejected") {
  NpcCertificate c6 = find_forbidden_structure(cycle_graph(6));
  auto& cycle = std::get<LongInducedCycle>(c6.witness).cycle;
  std::swap(cycle[0], cycle[1]);
  CHECK_FALSE(check_certificate(cycle_graph(6), c6));

  NpcCertificate claw{ObstructionEmbedding{Obstruction::kClaw,
                                           bipartite_claw().names()}};
  CHECK(check_certificate(bipartite_claw(), claw));
  CHECK_FALSE(check_certificate(bipartite_net(), claw));

  NpcCertificate mixed{MixedLoopEdge{"s", "r"}};
  CHECK_FALSE(check_certificate(make_graph({"r", "s"}, {{"r", "s"}}, {"r"}),
                                mixed));
}

TEST_CASE("classify examples") {
  std::vector<std::string> names = {"a", "b", "c", "d1", "d2", "d3", "d4"};
  Graph h = make_graph(names,
                       {{"a", "b"}, {"b", "c"}, {"d1", "d2"}, {"d2", "d3"},
                        {"d3", "d4"}, {"d4", "d1"}},
                       {"a", "b", "c"});
  Classification c = classify(h);
  CHECK(c.is_poly());
  CHECK(c.orderings().size() == 2);
  CHECK(c.certificate() == nullptr);

  Classification mixed =
      classify(make_graph({"r", "s"}, {{"r", "s"}}, {"r"}));
  REQUIRE(mixed.certificate());
  CHECK(mixed.certificate()->witness ==
        NpcCertificate::Witness{MixedLoopEdge{"r", "s"}});

  Classification k3 = classify(complete_graph(3));
  REQUIRE(k3.certificate());
  CHECK(std::holds_alternative<NonBipartiteComponent>(
      k3.certificate()->witness));
}

TEST_CASE("reflexive non proper interval targets certify through the double") {
  Graph star = loop_all(complete_bipartite(1, 3));
  Classification c = classify(star);
  REQUIRE(c.certificate());
  auto* via = std::get_if<ReflexiveViaDouble>(&c.certificate()->witness);
  REQUIRE(via);
  CHECK(check_certificate(star, *c.certificate()));
  CHECK(check_certificate(bipartite_double(star), *via->inner));
}

TEST_CASE("classify agrees with the definitions") {
  Rng rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> n(1, 6);
    Graph h = with_random_loops(random_graph(n(rng), 0.4, rng),
                                trial % 3 == 0 ? 0.5 : (trial % 3 == 1 ? 1.0 : 0.0),
                                rng);
    Classification c = classify(h);
    CHECK(c.is_poly() == is_polynomial_target(h));
    for (const auto& v : c.components) {
      if (v.is_poly()) {
        CHECK(verify_ordering(v.component, std::get<MinMaxOrdering>(v.verdict)));
      } else {
        CHECK(check_certificate(v.component, std::get<NpcCertificate>(v.verdict)));
      }
    }
  }
}
