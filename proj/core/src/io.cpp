#include "minhom/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "minhom/error.hpp"
#include "minhom/patterns.hpp"

namespace minhom {

namespace {

[[noreturn]] void schema_error(const std::string& where,
                               const std::string& what) {
  throw Error(ErrorCode::kSchemaError, where + ": " + what);
}

const Json& field(const Json& j, const std::string& key,
                  const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(where, "missing key '" + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(as_string(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

Json names_of(const Graph& g, const std::vector<VertexIndex>& vertices) {
  Json out = Json::array();
  for (VertexIndex v : vertices) out.push_back(g.name(v));
  return out;
}

std::vector<VertexIndex> indices_of(const Graph& g, const Json& j,
                                    const std::string& where) {
  std::vector<VertexIndex> out;
  for (const auto& name : as_strings(j, where)) {
    auto v = g.index_of(name);
    if (!v) schema_error(where, "unknown vertex '" + name + "'");
    out.push_back(*v);
  }
  return out;
}

Graph graph_at(const Json& j, const std::string& where) {
  try {
    return graph_from_json(j);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchemaError) schema_error(where, e.what());
    throw;
  }
}

using BigInt = boost::multiprecision::cpp_int;

Json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

BigInt integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      schema_error(where, "not an integer");
    }
  }
  schema_error(where, "expected an integer");
}

Json rational_json(const Rational& r) {
  return Json::array({integer_json(boost::multiprecision::numerator(r)),
                      integer_json(boost::multiprecision::denominator(r))});
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    schema_error(where, "expected [numerator, denominator]");
  }
  BigInt den = integer_from_json(j[1], where + "[1]");
  if (den == 0) schema_error(where, "zero denominator");
  return Rational(integer_from_json(j[0], where + "[0]"), den);
}

Json family_json(const IntervalFamily& family) {
  Json out = Json::object();
  for (const auto& [name, iv] : family) {
    out[name] = Json::array({rational_json(iv.left), rational_json(iv.right)});
  }
  return out;
}

IntervalFamily family_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an object");
  IntervalFamily family;
  for (const auto& [name, value] : j.items()) {
    const std::string at = where + "." + name;
    if (!value.is_array() || value.size() != 2) {
      schema_error(at, "expected [left, right]");
    }
    family[name] = Interval{rational_from_json(value[0], at + "[0]"),
                            rational_from_json(value[1], at + "[1]")};
  }
  return family;
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) {
    edges.push_back(Json::array({g.name(a), g.name(b)}));
  }
  return Json{{"vertices", g.names()},
              {"edges", edges},
              {"loops", names_of(g, g.loop_vertices())}};
}

Graph graph_from_json(const Json& j) {
  std::vector<std::string> vertices =
      as_strings(field(j, "vertices", "graph"), "graph.vertices");
  std::vector<NamedEdge> edges;
  if (j.contains("edges")) {
    const Json& list = j["edges"];
    if (!list.is_array()) schema_error("graph.edges", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = "graph.edges[" + std::to_string(k) + "]";
      auto pair = as_strings(list[k], at);
      if (pair.size() != 2) schema_error(at, "expected two endpoints");
      edges.emplace_back(pair[0], pair[1]);
    }
  }
  std::vector<std::string> loops;
  if (j.contains("loops")) loops = as_strings(j["loops"], "graph.loops");
  try {
    return Graph(std::move(vertices), edges, loops);
  } catch (const Error& e) {
    schema_error("graph", e.what());
  }
}

Json to_json(const Instance& inst) {
  Json costs = Json::object();
  for (VertexIndex u = 0; u < inst.source.size(); ++u) {
    Json row = Json::object();
    for (VertexIndex i = 0; i < inst.target.size(); ++i) {
      Cost c = inst.costs.at(u, i);
      row[inst.target.name(i)] =
          c.is_infinite() ? Json("inf") : Json(c.value());
    }
    costs[inst.source.name(u)] = row;
  }
  return Json{{"source", to_json(inst.source)},
              {"target", to_json(inst.target)},
              {"costs", costs}};
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.source = graph_at(field(j, "source", "instance"), "source");
  inst.target = graph_at(field(j, "target", "instance"), "target");
  const Json& costs = field(j, "costs", "instance");
  if (!costs.is_object()) schema_error("costs", "expected an object");
  for (const auto& [u, row] : costs.items()) {
    if (!inst.source.index_of(u)) {
      schema_error("costs." + u, "unknown source vertex");
    }
    if (!row.is_object()) schema_error("costs." + u, "expected an object");
    for (const auto& [i, value] : row.items()) {
      if (!inst.target.index_of(i)) {
        schema_error("costs." + u + "." + i, "unknown target vertex");
      }
    }
  }
  inst.costs = CostTable(inst.source.size(), inst.target.size());
  for (VertexIndex u = 0; u < inst.source.size(); ++u) {
    const std::string& un = inst.source.name(u);
    for (VertexIndex i = 0; i < inst.target.size(); ++i) {
      const std::string& in = inst.target.name(i);
      const std::string at = "costs." + un + "." + in;
      if (!costs.contains(un) || !costs[un].contains(in)) {
        schema_error(at, "missing cost");
      }
      const Json& value = costs[un][in];
      if (value.is_string() && value.get<std::string>() == "inf") {
        inst.costs.set(u, i, Cost::infinite());
      } else if (value.is_number_unsigned()) {
        const auto v = value.get<std::uint64_t>();
        if (v > static_cast<std::uint64_t>(
                    std::numeric_limits<std::int64_t>::max())) {
          schema_error(at, "cost does not fit in 63 bits");
        }
        inst.costs.set(u, i, Cost(static_cast<std::int64_t>(v)));
      } else if (value.is_number_integer()) {
        schema_error(at, "negative cost");
      } else {
        schema_error(at, "expected a nonnegative integer or \"inf\"");
      }
    }
  }
  try {
    inst.costs.finite_total();
  } catch (const Error& e) {
    schema_error("costs", e.what());
  }
  return inst;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kParseError,
                "cannot open '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path.string() + ": " + e.what());
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

Instance parse_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path));
}

Json to_json(const Graph& h, const MinMaxOrdering& ordering) {
  if (const auto* refl = std::get_if<ReflexiveOrdering>(&ordering)) {
    return Json{{"kind", "reflexive"}, {"order", names_of(h, refl->order)}};
  }
  const auto& big = std::get<BigraphOrdering>(ordering);
  return Json{{"kind", "bigraph"},
              {"white", names_of(h, big.white)},
              {"black", names_of(h, big.black)}};
}

MinMaxOrdering ordering_from_json(const Graph& h, const Json& j) {
  const std::string kind = as_string(field(j, "kind", "ordering"),
                                     "ordering.kind");
  if (kind == "reflexive") {
    return ReflexiveOrdering{
        indices_of(h, field(j, "order", "ordering"), "ordering.order")};
  }
  if (kind == "bigraph") {
    return BigraphOrdering{
        indices_of(h, field(j, "white", "ordering"), "ordering.white"),
        indices_of(h, field(j, "black", "ordering"), "ordering.black")};
  }
  schema_error("ordering.kind", "unknown ordering kind '" + kind + "'");
}

Json to_json(const NpcCertificate& cert) {
  Json witness;
  if (const auto* w = std::get_if<MixedLoopEdge>(&cert.witness)) {
    witness = Json{{"looped", w->looped}, {"unlooped", w->unlooped}};
  } else if (const auto* w = std::get_if<NonBipartiteComponent>(&cert.witness)) {
    witness = Json{{"cycle", w->cycle}};
  } else if (const auto* w = std::get_if<LongInducedCycle>(&cert.witness)) {
    witness = Json{{"cycle", w->cycle}};
  } else if (const auto* w = std::get_if<ObstructionEmbedding>(&cert.witness)) {
    const Graph& pattern = obstruction_graph(w->pattern);
    witness = Json::object();
    for (VertexIndex k = 0; k < pattern.size(); ++k) {
      witness[pattern.name(k)] = w->image.at(k);
    }
  } else {
    const auto& via = std::get<ReflexiveViaDouble>(cert.witness);
    witness = Json{{"certificate", to_json(*via.inner)}};
  }
  return Json{{"kind", cert.kind()}, {"witness", witness}};
}

NpcCertificate certificate_from_json(const Json& j) {
  const std::string kind =
      as_string(field(j, "kind", "certificate"), "certificate.kind");
  const Json& w = field(j, "witness", "certificate");
  const std::string where = "certificate.witness";
  if (kind == "mixed_loop_edge") {
    return {MixedLoopEdge{as_string(field(w, "looped", where), where),
                          as_string(field(w, "unlooped", where), where)}};
  }
  if (kind == "non_bipartite_component") {
    return {NonBipartiteComponent{
        as_strings(field(w, "cycle", where), where + ".cycle")}};
  }
  if (kind == "long_induced_cycle") {
    return {LongInducedCycle{
        as_strings(field(w, "cycle", where), where + ".cycle")}};
  }
  if (kind == "reflexive_via_double") {
    return {ReflexiveViaDouble{std::make_shared<const NpcCertificate>(
        certificate_from_json(field(w, "certificate", where)))}};
  }
  for (Obstruction pattern : kObstructions) {
    if (to_string(pattern) != kind) continue;
    const Graph& shape = obstruction_graph(pattern);
    ObstructionEmbedding e{pattern, {}};
    for (const auto& name : shape.names()) {
      e.image.push_back(as_string(field(w, name, where), where + "." + name));
    }
    return {e};
  }
  schema_error("certificate.kind", "unknown certificate kind '" + kind + "'");
}

Json to_json(const Classification& c) {
  Json components = Json::array();
  for (const auto& verdict : c.components) {
    Json entry{{"graph", to_json(verdict.component)}};
    if (verdict.is_poly()) {
      entry["ordering"] = to_json(verdict.component,
                                  std::get<MinMaxOrdering>(verdict.verdict));
    } else {
      entry["certificate"] =
          to_json(std::get<NpcCertificate>(verdict.verdict));
    }
    components.push_back(entry);
  }
  Json out{{"verdict", c.is_poly() ? "poly" : "npc"}};
  if (c.is_poly()) {
    Json orderings = Json::array();
    for (const auto& entry : components) orderings.push_back(entry["ordering"]);
    out["orderings"] = orderings;
  } else {
    out["certificate"] = to_json(*c.certificate());
  }
  out["components"] = components;
  return out;
}

Classification classification_from_json(const Json& j) {
  const Json& list = field(j, "components", "classification");
  if (!list.is_array()) schema_error("components", "expected an array");
  Classification c;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = "components[" + std::to_string(k) + "]";
    ComponentVerdict verdict;
    verdict.component = graph_at(field(list[k], "graph", at), at + ".graph");
    if (list[k].contains("ordering")) {
      verdict.verdict = ordering_from_json(verdict.component,
                                           list[k]["ordering"]);
    } else {
      verdict.verdict =
          certificate_from_json(field(list[k], "certificate", at));
    }
    c.components.push_back(std::move(verdict));
  }
  return c;
}

Json to_json(const Graph& g, const Graph& h, const SolveResult& result) {
  if (const auto* opt = std::get_if<Optimal>(&result)) {
    Json assignment = Json::object();
    for (VertexIndex u = 0; u < g.size(); ++u) {
      assignment[g.name(u)] = h.name(opt->hom.image.at(u));
    }
    return Json{{"status", "optimal"},
                {"cost", opt->cost},
                {"assignment", assignment}};
  }
  if (std::holds_alternative<NoHomomorphism>(result)) {
    return Json{{"status", "no_homomorphism"}};
  }
  return Json{{"status", "npc_target"},
              {"certificate", to_json(std::get<NpcTarget>(result).certificate)}};
}

SolveResult solve_result_from_json(const Graph& g, const Graph& h,
                                   const Json& j) {
  const std::string status = as_string(field(j, "status", "result"),
                                       "result.status");
  if (status == "no_homomorphism") return NoHomomorphism{};
  if (status == "npc_target") {
    return NpcTarget{certificate_from_json(field(j, "certificate", "result"))};
  }
  if (status != "optimal") {
    schema_error("result.status", "unknown status '" + status + "'");
  }
  const Json& cost = field(j, "cost", "result");
  if (!cost.is_number_integer()) schema_error("result.cost", "expected integer");
  Optimal opt{cost.get<std::int64_t>(), {}};
  const Json& assignment = field(j, "assignment", "result");
  for (VertexIndex u = 0; u < g.size(); ++u) {
    const std::string at = "result.assignment." + g.name(u);
    const std::string target = as_string(field(assignment, g.name(u), at), at);
    auto i = h.index_of(target);
    if (!i) schema_error(at, "unknown target vertex '" + target + "'");
    opt.hom.image.push_back(*i);
  }
  return opt;
}

Json to_json(const IntervalRep& rep) {
  if (const auto* big = std::get_if<BigraphIntervals>(&rep)) {
    return Json{{"kind", "bigraph"},
                {"white", family_json(big->white)},
                {"black", family_json(big->black)}};
  }
  return Json{{"kind", "reflexive"},
              {"intervals",
               family_json(std::get<ReflexiveIntervals>(rep).intervals)}};
}

IntervalRep interval_rep_from_json(const Json& j) {
  const std::string kind =
      as_string(field(j, "kind", "intervals"), "intervals.kind");
  if (kind == "bigraph") {
    return BigraphIntervals{
        family_from_json(field(j, "white", "intervals"), "white"),
        family_from_json(field(j, "black", "intervals"), "black")};
  }
  if (kind == "reflexive") {
    return ReflexiveIntervals{
        family_from_json(field(j, "intervals", "intervals"), "intervals")};
  }
  schema_error("intervals.kind", "unknown kind '" + kind + "'");
}

Json to_json(const ThreePartiteGraph& g) {
  return Json{{"graph", to_json(g.graph)},
              {"parts", Json::array({g.parts[0], g.parts[1], g.parts[2]})}};
}

ThreePartiteGraph three_partite_from_json(const Json& j) {
  ThreePartiteGraph g;
  g.graph = graph_at(field(j, "graph", "three_partite"), "graph");
  const Json& parts = field(j, "parts", "three_partite");
  if (!parts.is_array() || parts.size() != 3) {
    schema_error("parts", "expected three vertex lists");
  }
  for (std::size_t k = 0; k < 3; ++k) {
    g.parts[k] = as_strings(parts[k], "parts[" + std::to_string(k) + "]");
  }
  return g;
}

Json gadget_sidecar(const GadgetInstance& inst) {
  return Json{{"offset", inst.offset},
              {"kind", to_string(inst.kind)},
              {"alpha_formula", "offset - mch"}};
}

Instance gadget_instance(const GadgetInstance& inst) {
  return Instance{inst.gstar, inst.target, inst.costs};
}

std::string dump(const Json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace minhom
