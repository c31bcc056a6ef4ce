#include <doctest.h>

#include "brute.hpp"
#include "fixtures.hpp"
#include "minhom/error.hpp"
#include "minhom/generators.hpp"
#include "minhom/oracle.hpp"
#include "minhom/patterns.hpp"
#include "minhom/reductions.hpp"

using namespace minhom;
using namespace minhom::testing;

namespace {

std::int64_t mch(const GadgetInstance& inst) {
  SolveResult r = brute_force_mch(inst.gstar, inst.costs, inst.target);
  REQUIRE(std::holds_alternative<Optimal>(r));
  return std::get<Optimal>(r).cost;
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

ThreePartiteGraph triangle() {
  return {make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
          {{{"a"}, {"b"}, {"c"}}}};
}

}  // namespace

TEST_CASE("claw gadget of a triangle") {
  GadgetInstance inst = gadget_build(triangle(), GadgetKind::kClaw);
  CHECK(inst.gstar.size() == 6);
  CHECK(inst.gstar.edge_count() == 6);
  CHECK(inst.offset == 3);
  CHECK(inst.target == bipartite_claw());
  const std::int64_t m = mch(inst);
  CHECK(m == 2);
  CHECK(recover_alpha(inst, m) == 1);
  CHECK(recover_alpha(inst, m) ==
        static_cast<std::int64_t>(subset_alpha(triangle().graph)));
}

TEST_CASE("claw gadget costs") {
  GadgetInstance inst = gadget_build(triangle(), GadgetKind::kClaw);
  const VertexIndex a = inst.gstar.require_index("a");
  const VertexIndex m = inst.gstar.require_index("m(a,b)");
  const Graph& h = inst.target;
  CHECK(inst.costs.at(a, h.require_index("x1")) == Cost(0));
  CHECK(inst.costs.at(a, h.require_index("x4")) == Cost(1));
  CHECK(inst.costs.at(a, h.require_index("x2")) == Cost(3));
  CHECK(inst.costs.at(a, h.require_index("y1")) == Cost(3));
  CHECK(inst.costs.at(m, h.require_index("y2")) == Cost(0));
  CHECK(inst.costs.at(m, h.require_index("x3")) == Cost(3));
}

TEST_CASE("net gadget of a single edge") {
  ThreePartiteGraph g{make_graph({"a", "b"}, {{"a", "b"}}), {{{"a"}, {"b"}, {}}}};
  GadgetInstance inst = gadget_build(g, GadgetKind::kNet);
  CHECK(inst.offset == 2);
  CHECK(inst.gstar.size() == 3);
  CHECK(mch(inst) == 1);
  CHECK(recover_alpha(inst, 1) == 1);
}

TEST_CASE("net gadget paths") {
  ThreePartiteGraph g{make_graph({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}),
                      {{{"a"}, {"b"}, {"c"}}}};
  GadgetInstance inst = gadget_build(g, GadgetKind::kNet);
  CHECK(inst.offset == 5);
  CHECK(inst.gstar.size() == 7);
  const Graph& s = inst.gstar;
  CHECK(s.adjacent(s.require_index("a"), s.require_index("s1(c)")));
  CHECK(s.adjacent(s.require_index("b"), s.require_index("s3(c)")));
  CHECK(s.adjacent(s.require_index("t1(c)"), s.require_index("s2(c)")));
  CHECK_FALSE(s.index_of("c"));
  const VertexIndex t = s.require_index("t2(c)");
  CHECK(inst.costs.at(t, inst.target.require_index("x4")) == Cost(1));
  CHECK(inst.costs.at(t, inst.target.require_index("y3")) == Cost(0));
  CHECK(recover_alpha(inst, mch(inst)) == 2);
}

TEST_CASE("tent gadget of an edgeless graph") {
  ThreePartiteGraph g{empty_graph(3, "g"), {{{"g1"}, {"g2"}, {"g3"}}}};
  GadgetInstance inst = gadget_build(g, GadgetKind::kTent);
  CHECK(inst.offset == 3);
  CHECK(mch(inst) == 0);
  CHECK(recover_alpha(inst, 0) == 3);
}

TEST_CASE("tent gadget keeps edges at the third part") {
  ThreePartiteGraph g{make_graph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}),
                      {{{"a"}, {"b"}, {"c"}}}};
  GadgetInstance inst = gadget_build(g, GadgetKind::kTent);
  const Graph& s = inst.gstar;
  CHECK(s.adjacent(s.require_index("a"), s.require_index("c")));
  CHECK(s.index_of("m(a,b)"));
  CHECK(s.size() == 4);
}

TEST_CASE("invalid partitions") {
  ThreePartiteGraph inside{make_graph({"a", "b"}, {{"a", "b"}}),
                           {{{"a", "b"}, {}, {}}}};
  CHECK(code_of([&] { gadget_build(inside, GadgetKind::kClaw); }) ==
        ErrorCode::kInvalidPartition);
  ThreePartiteGraph missing{make_graph({"a", "b"}, {}), {{{"a"}, {}, {}}}};
  CHECK(code_of([&] { gadget_build(missing, GadgetKind::kClaw); }) ==
        ErrorCode::kInvalidPartition);
  ThreePartiteGraph twice{make_graph({"a"}, {}), {{{"a"}, {"a"}, {}}}};
  CHECK(code_of([&] { validate(twice); }) == ErrorCode::kInvalidPartition);
  ThreePartiteGraph clash{make_graph({"a", "b", "m(a,b)"}, {{"a", "b"}}),
                          {{{"a", "m(a,b)"}, {"b"}, {}}}};
  CHECK(code_of([&] { gadget_build(clash, GadgetKind::kClaw); }) ==
        ErrorCode::kInvalidPartition);
}

TEST_CASE("recover_alpha rejects impossible values") {
  GadgetInstance inst = gadget_build(triangle(), GadgetKind::kClaw);
  CHECK(code_of([&] { recover_alpha(inst, 4); }) == ErrorCode::kNegativeResult);
}

TEST_CASE("gadget formulas on random 3-partite graphs") {
  Rng rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> n(1, 6);
    ThreePartiteGraph g = random_three_partite(n(rng), 0.5, rng);
    const auto alpha = static_cast<std::int64_t>(subset_alpha(g.graph));
    for (GadgetKind kind :
         {GadgetKind::kClaw, GadgetKind::kNet, GadgetKind::kTent}) {
      GadgetInstance inst = gadget_build(g, kind);
      SolveResult r = brute_force_mch(inst.gstar, inst.costs, inst.target);
      REQUIRE(std::holds_alternative<Optimal>(r));
      const auto& opt = std::get<Optimal>(r);
      CHECK(recover_alpha(inst, opt.cost) == alpha);

      auto set = recover_independent_set(inst, g, opt.hom);
      CHECK(is_independent_set(g.graph, indices(g.graph, set)));
      CHECK(static_cast<std::int64_t>(set.size()) >= inst.offset - opt.cost);
    }
  }
}

TEST_CASE("loop/non-loop reduction examples") {
  Graph h = make_graph({"r", "s"}, {{"r", "s"}}, {"r"});
  GadgetInstance k3 = loop_nonloop_reduction(complete_graph(3), h, "r", "s");
  CHECK(k3.offset == 3);
  CHECK(mch(k3) == 2);
  CHECK(mch(loop_nonloop_reduction(empty_graph(4), h, "r", "s")) == 0);
  CHECK(mch(loop_nonloop_reduction(cycle_graph(4), h, "r", "s")) == 2);
}

TEST_CASE("loop/non-loop reduction errors") {
  Graph h = make_graph({"r", "s"}, {{"r", "s"}}, {"r"});
  CHECK(code_of([&] { loop_nonloop_reduction(path_graph(2), h, "s", "r"); }) ==
        ErrorCode::kNotMixedEdge);
  CHECK(code_of([&] { loop_nonloop_reduction(path_graph(2), h, "r", "q"); }) ==
        ErrorCode::kNotMixedEdge);
  Graph looped = make_graph({"a"}, {}, {"a"});
  CHECK(code_of([&] { loop_nonloop_reduction(looped, h, "r", "s"); }) ==
        ErrorCode::kInvalidGraph);
}

TEST_CASE("gadget kind names") {
  for (GadgetKind kind : {GadgetKind::kClaw, GadgetKind::kNet,
                          GadgetKind::kTent, GadgetKind::kLoopNonLoop}) {
    CHECK(gadget_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(gadget_kind_from_string("wheel"), Error);
}
