#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minhom {

struct SelftestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;
  bool passed() const;
};

// Small randomized invariant suite: catalog verdicts, solver against the
// oracle, interval round trips, gadget formulas and the bipartite double
// equivalence. Deterministic for a given seed.
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace minhom
