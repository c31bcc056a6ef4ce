#pragma once

#include <cstdint>
#include <variant>

#include "minhom/costs.hpp"
#include "minhom/cut_network.hpp"
#include "minhom/graph.hpp"
#include "minhom/recognition.hpp"

namespace minhom {

struct Optimal {
  std::int64_t cost = 0;
  Homomorphism hom;
  friend bool operator==(const Optimal&, const Optimal&) = default;
};

struct NoHomomorphism {
  friend bool operator==(const NoHomomorphism&,
                         const NoHomomorphism&) = default;
};

struct NpcTarget {
  NpcCertificate certificate;
  friend bool operator==(const NpcTarget&, const NpcTarget&) = default;
};

using SolveResult = std::variant<Optimal, NoHomomorphism, NpcTarget>;

// Minimum-cost homomorphism of (g, costs) to h through one minimum cut per
// (source component, target component, orientation). Targets outside the
// polynomial class are refused with their certificate. Source loops are
// handled by forbidding unlooped targets for looped source vertices.
// Throws kCostTableIncomplete and kOverflow.
SolveResult solve(const Graph& g, const CostTable& costs, const Graph& h);

// Same, reusing a classification of h computed earlier.
SolveResult solve(const Graph& g, const CostTable& costs, const Graph& h,
                  const Classification& classification);

}  // namespace minhom
