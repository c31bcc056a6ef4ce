#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace minhom {

// Dinic's algorithm on integral capacities. Augmentation order is fixed by
// arc insertion order, so results are deterministic.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t node_count);

  // Returns the arc id.
  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t capacity);

  std::int64_t max_flow(std::size_t source, std::size_t sink);

  // Nodes reachable from `source` in the residual network of the last flow.
  std::vector<bool> residual_reachable(std::size_t source) const;

  std::int64_t flow_on(std::size_t arc) const;
  std::size_t node_count() const noexcept { return adjacency_.size(); }

 private:
  struct Edge {
    std::size_t to;
    std::int64_t residual;
  };

  bool build_levels(std::size_t source, std::size_t sink);
  std::int64_t push(std::size_t node, std::size_t sink, std::int64_t limit);

  std::vector<Edge> edges_;  // arc 2k forward, 2k+1 reverse
  std::vector<std::int64_t> capacity_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace minhom
