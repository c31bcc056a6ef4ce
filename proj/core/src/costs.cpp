#include "minhom/costs.hpp"

#include <limits>
#include <string>

#include "minhom/error.hpp"

namespace minhom {

Cost::Cost(std::int64_t value) : value_(value) {
  if (value < 0) {
    throw Error(ErrorCode::kSchemaError,
                "negative cost " + std::to_string(value));
  }
}

CostTable::CostTable(std::size_t source_count, std::size_t target_count,
                     Cost fill)
    : sources_(source_count),
      targets_(target_count),
      values_(source_count * target_count, fill) {}

Cost CostTable::at(VertexIndex u, VertexIndex i) const {
  if (u >= sources_ || i >= targets_) {
    throw Error(ErrorCode::kMissingCost,
                "no cost entry for (" + std::to_string(u) + ", " +
                    std::to_string(i) + ")");
  }
  return values_[u * targets_ + i];
}

void CostTable::set(VertexIndex u, VertexIndex i, Cost c) {
  if (u >= sources_ || i >= targets_) {
    throw Error(ErrorCode::kMissingCost,
                "cost entry (" + std::to_string(u) + ", " + std::to_string(i) +
                    ") outside the table");
  }
  values_[u * targets_ + i] = c;
}

std::int64_t CostTable::finite_total() const {
  std::int64_t total = 0;
  for (Cost c : values_) {
    if (c.is_infinite()) continue;
    if (c.value() > std::numeric_limits<std::int64_t>::max() - total) {
      throw Error(ErrorCode::kOverflow,
                  "sum of finite costs does not fit in 63 bits");
    }
    total += c.value();
  }
  return total;
}

CostTable CostTable::restricted(std::span<const VertexIndex> sources,
                                std::span<const VertexIndex> targets) const {
  CostTable out(sources.size(), targets.size());
  for (std::size_t a = 0; a < sources.size(); ++a) {
    for (std::size_t b = 0; b < targets.size(); ++b) {
      out.set(a, b, at(sources[a], targets[b]));
    }
  }
  return out;
}

bool is_homomorphism(const Graph& g, const Graph& h, const Homomorphism& f) {
  if (f.image.size() != g.size()) return false;
  for (VertexIndex v : f.image) {
    if (v >= h.size()) return false;
  }
  for (const auto& [a, b] : g.edges()) {
    if (!h.adjacent(f.image[a], f.image[b])) return false;
  }
  for (VertexIndex u : g.loop_vertices()) {
    if (!h.has_loop(f.image[u])) return false;
  }
  return true;
}

std::optional<std::int64_t> homomorphism_cost(const CostTable& costs,
                                              const Homomorphism& f) {
  std::int64_t total = 0;
  for (VertexIndex u = 0; u < f.image.size(); ++u) {
    Cost c = costs.at(u, f.image[u]);
    if (c.is_infinite()) return std::nullopt;
    total += c.value();
  }
  return total;
}

}  // namespace minhom
