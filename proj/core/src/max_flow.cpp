#include "minhom/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "minhom/error.hpp"

namespace minhom {

FlowNetwork::FlowNetwork(std::size_t node_count)
    : adjacency_(node_count), level_(node_count), cursor_(node_count) {}

std::size_t FlowNetwork::add_arc(std::size_t from, std::size_t to,
                                 std::int64_t capacity) {
  if (from >= adjacency_.size() || to >= adjacency_.size() || capacity < 0) {
    throw Error(ErrorCode::kInternalInconsistency, "malformed flow arc");
  }
  const std::size_t id = edges_.size();
  edges_.push_back({to, capacity});
  edges_.push_back({from, 0});
  capacity_.push_back(capacity);
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id / 2;
}

bool FlowNetwork::build_levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop();
    for (std::size_t e : adjacency_[u]) {
      const Edge& edge = edges_[e];
      if (edge.residual > 0 && level_[edge.to] < 0) {
        level_[edge.to] = level_[u] + 1;
        queue.push(edge.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t FlowNetwork::push(std::size_t node, std::size_t sink,
                               std::int64_t limit) {
  if (node == sink) return limit;
  for (std::size_t& k = cursor_[node]; k < adjacency_[node].size(); ++k) {
    const std::size_t e = adjacency_[node][k];
    Edge& edge = edges_[e];
    if (edge.residual <= 0 || level_[edge.to] != level_[node] + 1) continue;
    const std::int64_t pushed =
        push(edge.to, sink, std::min(limit, edge.residual));
    if (pushed > 0) {
      edge.residual -= pushed;
      edges_[e ^ 1].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (std::int64_t pushed =
               push(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += pushed;
    }
  }
  return total;
}

std::vector<bool> FlowNetwork::residual_reachable(std::size_t source) const {
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<std::size_t> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t e : adjacency_[u]) {
      const Edge& edge = edges_[e];
      if (edge.residual > 0 && !seen[edge.to]) {
        seen[edge.to] = true;
        stack.push_back(edge.to);
      }
    }
  }
  return seen;
}

std::int64_t FlowNetwork::flow_on(std::size_t arc) const {
  return capacity_.at(arc) - edges_.at(2 * arc).residual;
}

}  // namespace minhom
