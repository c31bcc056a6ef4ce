#pragma once

#include <array>
#include <string_view>

#include "minhom/graph.hpp"

namespace minhom {

// The three small bipartite graphs that, together with induced cycles of
// length at least six, obstruct proper interval bigraphs. All three live on
// the vertex names x1..x4 (one side) and y1..y3 (the other side).
enum class Obstruction { kClaw, kNet, kTent };

inline constexpr std::array<Obstruction, 3> kObstructions = {
    Obstruction::kClaw, Obstruction::kNet, Obstruction::kTent};

std::string_view to_string(Obstruction pattern);

// x4 joined to y1, y2, y3; each y_i carries the pendant x_i.
const Graph& bipartite_claw();
// The 4-cycle x3 y1 x4 y2 with pendants x1 at y1, x2 at y2 and y3 at x4.
const Graph& bipartite_net();
// Eight edges: x4y1, y1x1, x1y2, y2x4, x1y3, y3x2, x2y1, y1x3.
const Graph& bipartite_tent();

const Graph& obstruction_graph(Obstruction pattern);

}  // namespace minhom
