#include <doctest.h>

#include <limits>

#include "fixtures.hpp"
#include "minhom/costs.hpp"
#include "minhom/error.hpp"

using namespace minhom;
using namespace minhom::testing;

TEST_CASE("cost values") {
  CHECK(Cost(7).value() == 7);
  CHECK_FALSE(Cost(0).is_infinite());
  CHECK(Cost::infinite().is_infinite());
  CHECK(Cost::infinite() != Cost(0));
  CHECK_THROWS_AS(Cost(-1), Error);
}

TEST_CASE("cost table access") {
  CostTable t(2, 3);
  t.set(1, 2, Cost(4));
  t.set(0, 0, Cost::infinite());
  CHECK(t.at(1, 2) == Cost(4));
  CHECK(t.at(0, 1) == Cost(0));
  CHECK(t.finite_total() == 4);
  CHECK_THROWS_AS(t.at(2, 0), Error);
  CHECK_THROWS_AS(t.set(0, 3, Cost(1)), Error);
}

TEST_CASE("finite total overflow") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max() / 2 + 1;
  CostTable t(1, 2);
  t.set(0, 0, Cost(big));
  t.set(0, 1, Cost(big));
  try {
    t.finite_total();
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOverflow);
  }
}

TEST_CASE("restriction keeps the selected block") {
  CostTable t(3, 3);
  for (VertexIndex u = 0; u < 3; ++u) {
    for (VertexIndex i = 0; i < 3; ++i) t.set(u, i, Cost(10 * u + i));
  }
  const std::vector<VertexIndex> rows = {2, 0}, cols = {1};
  CostTable r = t.restricted(rows, cols);
  CHECK(r.source_count() == 2);
  CHECK(r.target_count() == 1);
  CHECK(r.at(0, 0) == Cost(21));
  CHECK(r.at(1, 0) == Cost(1));
}

TEST_CASE("homomorphism validation includes loops") {
  Graph g = make_graph({"a", "b"}, {{"a", "b"}}, {"a"});
  Graph h = make_graph({"r", "s"}, {{"r", "s"}}, {"r"});
  CHECK(is_homomorphism(g, h, Homomorphism{{0, 1}}));
  CHECK_FALSE(is_homomorphism(g, h, Homomorphism{{1, 0}}));
  CHECK_FALSE(is_homomorphism(g, h, Homomorphism{{0}}));
  CHECK(is_homomorphism(g, h, Homomorphism{{0, 0}}));
}

TEST_CASE("homomorphism cost") {
  CostTable t(2, 2);
  t.set(0, 0, Cost(5));
  t.set(0, 1, Cost(1));
  t.set(1, 0, Cost::infinite());
  t.set(1, 1, Cost(3));
  CHECK(homomorphism_cost(t, Homomorphism{{1, 1}}) == 4);
  CHECK_FALSE(homomorphism_cost(t, Homomorphism{{1, 0}}));
}
