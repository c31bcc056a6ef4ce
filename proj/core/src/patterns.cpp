#include "minhom/patterns.hpp"

namespace minhom {

namespace {

const std::vector<std::string> kPatternVertices = {"x1", "x2", "x3", "x4",
                                                   "y1", "y2", "y3"};

}  // namespace

std::string_view to_string(Obstruction pattern) {
  switch (pattern) {
    case Obstruction::kClaw: return "bipartite_claw";
    case Obstruction::kNet: return "bipartite_net";
    case Obstruction::kTent: return "bipartite_tent";
  }
  return "unknown";
}

const Graph& bipartite_claw() {
  static const Graph g(kPatternVertices, {{"x4", "y1"},
                                          {"y1", "x1"},
                                          {"x4", "y2"},
                                          {"y2", "x2"},
                                          {"x4", "y3"},
                                          {"y3", "x3"}});
  return g;
}

const Graph& bipartite_net() {
  static const Graph g(kPatternVertices, {{"x1", "y1"},
                                          {"y1", "x3"},
                                          {"y1", "x4"},
                                          {"x3", "y2"},
                                          {"x4", "y2"},
                                          {"y2", "x2"},
                                          {"y3", "x4"}});
  return g;
}

const Graph& bipartite_tent() {
  static const Graph g(kPatternVertices, {{"x4", "y1"},
                                          {"y1", "x1"},
                                          {"x1", "y2"},
                                          {"y2", "x4"},
                                          {"x1", "y3"},
                                          {"y3", "x2"},
                                          {"x2", "y1"},
                                          {"y1", "x3"}});
  return g;
}

const Graph& obstruction_graph(Obstruction pattern) {
  switch (pattern) {
    case Obstruction::kClaw: return bipartite_claw();
    case Obstruction::kNet: return bipartite_net();
    case Obstruction::kTent: return bipartite_tent();
  }
  return bipartite_claw();
}

}  // namespace minhom
