#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "minhom/costs.hpp"
#include "minhom/graph.hpp"
#include "minhom/intervals.hpp"
#include "minhom/recognition.hpp"
#include "minhom/reductions.hpp"
#include "minhom/solver.hpp"

namespace minhom {

using Json = nlohmann::json;

// All *_from_json functions throw Error(kSchemaError) with the offending key
// in the message.

// {"vertices": [...], "edges": [[a, b], ...], "loops": [...]}
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

struct Instance {
  Graph source;
  Graph target;
  CostTable costs;
  friend bool operator==(const Instance&, const Instance&) = default;
};

// {"source": Graph, "target": Graph, "costs": {"u": {"w": 3, "x": "inf"}}}
Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

// Throws kParseError for unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text);
Instance parse_instance(const std::filesystem::path& path);

// Orderings and certificates name vertices of `h`.
Json to_json(const Graph& h, const MinMaxOrdering& ordering);
MinMaxOrdering ordering_from_json(const Graph& h, const Json& j);

Json to_json(const NpcCertificate& cert);
NpcCertificate certificate_from_json(const Json& j);

Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

Json to_json(const Graph& g, const Graph& h, const SolveResult& result);
SolveResult solve_result_from_json(const Graph& g, const Graph& h,
                                   const Json& j);

// Endpoints are [numerator, denominator] pairs; components that do not fit
// in 64 bits are written as decimal strings.
Json to_json(const IntervalRep& rep);
IntervalRep interval_rep_from_json(const Json& j);

// {"graph": Graph, "parts": [[...], [...], [...]]}
Json to_json(const ThreePartiteGraph& g);
ThreePartiteGraph three_partite_from_json(const Json& j);

// {"offset": N, "kind": "...", "alpha_formula": "offset - mch"}
Json gadget_sidecar(const GadgetInstance& inst);
Instance gadget_instance(const GadgetInstance& inst);

std::string dump(const Json& j, bool pretty);

}  // namespace minhom
