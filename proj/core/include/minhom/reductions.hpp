#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "minhom/costs.hpp"
#include "minhom/graph.hpp"

namespace minhom {

// Irreflexive graph with its vertex set split into three independent parts.
struct ThreePartiteGraph {
  Graph graph;
  std::array<std::vector<std::string>, 3> parts;

  friend bool operator==(const ThreePartiteGraph&,
                         const ThreePartiteGraph&) = default;
};

// Throws kInvalidPartition.
void validate(const ThreePartiteGraph& g);

enum class GadgetKind { kClaw, kNet, kTent, kLoopNonLoop };

std::string_view to_string(GadgetKind kind);
// Throws kSchemaError for unknown names.
GadgetKind gadget_kind_from_string(std::string_view name);

// mch(gstar, target) = offset - alpha(original graph).
struct GadgetInstance {
  GadgetKind kind = GadgetKind::kClaw;
  Graph gstar;
  CostTable costs;
  Graph target;
  std::int64_t offset = 0;

  friend bool operator==(const GadgetInstance&,
                         const GadgetInstance&) = default;
};

// Generated vertex names in gstar: "m(u,v)" subdivides uv (u < v), and a
// vertex v of the third part becomes the path s1(v) t1(v) s2(v) t2(v) s3(v)
// in the net gadget. Throws kInvalidPartition, also when a generated name
// collides with an original one.
GadgetInstance gadget_build(const ThreePartiteGraph& g, GadgetKind kind);

// offset - mch. Throws kNegativeResult when that is negative.
std::int64_t recover_alpha(const GadgetInstance& inst, std::int64_t mch);

// Independent set of the original graph read off a homomorphism of the claw,
// net or tent gadget; of size at least offset - cost(f).
std::vector<std::string> recover_independent_set(const GadgetInstance& inst,
                                                 const ThreePartiteGraph& g,
                                                 const Homomorphism& f);

// Costs 0 at s and 1 elsewhere against h. Throws kNotMixedEdge unless rs is
// an edge of h with a loop at r only, and kInvalidGraph for looped g.
GadgetInstance loop_nonloop_reduction(const Graph& g, const Graph& h,
                                      std::string_view r, std::string_view s);

}  // namespace minhom
