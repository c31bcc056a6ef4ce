#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minhom/graph.hpp"

namespace minhom {

// Nonnegative integer cost or the infinite marker.
class Cost {
 public:
  constexpr Cost() = default;
  // Throws Error(kSchemaError) on negative values.
  explicit Cost(std::int64_t value);
  static constexpr Cost infinite() { return Cost(kInfinite, Tag{}); }

  constexpr bool is_infinite() const noexcept { return value_ == kInfinite; }
  constexpr std::int64_t value() const noexcept { return value_; }

  friend constexpr bool operator==(Cost, Cost) = default;

 private:
  struct Tag {};
  static constexpr std::int64_t kInfinite = -1;
  constexpr Cost(std::int64_t value, Tag) : value_(value) {}

  std::int64_t value_ = 0;
};

// cost(u, i) for source vertex u and target vertex i, both by vertex index.
class CostTable {
 public:
  CostTable() = default;
  CostTable(std::size_t source_count, std::size_t target_count,
            Cost fill = Cost(0));

  std::size_t source_count() const noexcept { return sources_; }
  std::size_t target_count() const noexcept { return targets_; }

  Cost at(VertexIndex u, VertexIndex i) const;
  void set(VertexIndex u, VertexIndex i, Cost c);

  // Sum of all finite entries. Throws Error(kOverflow) when it does not fit
  // in 63 bits.
  std::int64_t finite_total() const;

  CostTable restricted(std::span<const VertexIndex> sources,
                       std::span<const VertexIndex> targets) const;

  friend bool operator==(const CostTable&, const CostTable&) = default;

 private:
  std::size_t sources_ = 0;
  std::size_t targets_ = 0;
  std::vector<Cost> values_;
};

// f: V(G) -> V(H) as target index per source index.
struct Homomorphism {
  std::vector<VertexIndex> image;
  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

// Edges map to edges and looped source vertices map to looped targets.
bool is_homomorphism(const Graph& g, const Graph& h, const Homomorphism& f);

// Sum of cost(u, f(u)); nullopt when some entry is infinite.
std::optional<std::int64_t> homomorphism_cost(const CostTable& costs,
                                              const Homomorphism& f);

}  // namespace minhom
