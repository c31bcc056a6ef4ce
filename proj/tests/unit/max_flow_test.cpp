#include <doctest.h>

#include <limits>
#include <random>

#include "minhom/max_flow.hpp"

using namespace minhom;

namespace {

struct RawArc {
  std::size_t from, to;
  std::int64_t cap;
};

// Minimum over all s-t node bipartitions.
std::int64_t brute_min_cut(std::size_t n, const std::vector<RawArc>& arcs) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & 1) || (mask & 2)) continue;  // s = 0 inside, t = 1 outside
    std::int64_t cut = 0;
    for (const auto& a : arcs) {
      if ((mask >> a.from & 1) && !(mask >> a.to & 1)) cut += a.cap;
    }
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace

TEST_CASE("single arc and series arcs") {
  FlowNetwork f(2);
  f.add_arc(0, 1, 5);
  CHECK(f.max_flow(0, 1) == 5);

  FlowNetwork chain(4);
  chain.add_arc(0, 2, 3);
  chain.add_arc(2, 3, 1);
  chain.add_arc(3, 1, 4);
  CHECK(chain.max_flow(0, 1) == 1);
  auto side = chain.residual_reachable(0);
  CHECK(side[0]);
  CHECK(side[2]);
  CHECK_FALSE(side[3]);
  CHECK_FALSE(side[1]);
}

TEST_CASE("disconnected sink") {
  FlowNetwork f(3);
  f.add_arc(0, 2, 9);
  CHECK(f.max_flow(0, 1) == 0);
}

TEST_CASE("max flow equals brute-force min cut on random networks") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<std::int64_t> cap(0, 9);
  std::bernoulli_distribution coin(0.35);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 9;
    std::vector<RawArc> arcs;
    FlowNetwork f(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || !coin(rng)) continue;
        arcs.push_back({a, b, cap(rng)});
        f.add_arc(a, b, arcs.back().cap);
      }
    }
    const std::int64_t flow = f.max_flow(0, 1);
    CHECK(flow == brute_min_cut(n, arcs));

    // The residual source side is a cut of the same value.
    auto side = f.residual_reachable(0);
    CHECK_FALSE(side[1]);
    std::int64_t cut = 0;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (side[arcs[k].from] && !side[arcs[k].to]) cut += arcs[k].cap;
      CHECK(f.flow_on(k) >= 0);
      CHECK(f.flow_on(k) <= arcs[k].cap);
    }
    CHECK(cut == flow);
  }
}
