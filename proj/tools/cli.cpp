#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "minhom/error.hpp"
#include "minhom/intervals.hpp"
#include "minhom/io.hpp"
#include "minhom/oracle.hpp"
#include "minhom/recognition.hpp"
#include "minhom/reductions.hpp"
#include "minhom/selftest.hpp"
#include "minhom/solver.hpp"

namespace minhom::cli {

namespace {

struct Options {
  bool pretty = false;
  std::uint64_t seed = 1;
  std::string input;
  std::string kind;
  std::string out_prefix;
  std::uint64_t node_limit = OracleOptions{}.node_limit;
};

int solve_exit_code(const SolveResult& r) {
  if (std::holds_alternative<Optimal>(r)) return kSuccess;
  if (std::holds_alternative<NoHomomorphism>(r)) return kNoHomomorphism;
  return kNpcTarget;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::kParseError, "cannot write '" + path + "'");
  f << text << '\n';
}

int cmd_classify(const Options& o, std::ostream& out) {
  const Graph h = graph_from_json(read_json_file(o.input));
  out << dump(to_json(classify(h)), o.pretty) << '\n';
  return kSuccess;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Instance inst = parse_instance(o.input);
  const SolveResult r = solve(inst.source, inst.costs, inst.target);
  out << dump(to_json(inst.source, inst.target, r), o.pretty) << '\n';
  return solve_exit_code(r);
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Instance inst = parse_instance(o.input);
  const SolveResult r = brute_force_mch(inst.source, inst.costs, inst.target,
                                        OracleOptions{o.node_limit});
  out << dump(to_json(inst.source, inst.target, r), o.pretty) << '\n';
  return solve_exit_code(r);
}

int cmd_gadget(const Options& o, std::ostream& out, std::ostream& err) {
  const ThreePartiteGraph g = three_partite_from_json(read_json_file(o.input));
  const GadgetKind kind = gadget_kind_from_string(o.kind);
  if (kind == GadgetKind::kLoopNonLoop) {
    throw Error(ErrorCode::kSchemaError,
                "--kind must be one of claw, net, tent");
  }
  const GadgetInstance inst = gadget_build(g, kind);
  const Json instance = to_json(gadget_instance(inst));
  const Json sidecar = gadget_sidecar(inst);
  if (o.out_prefix.empty()) {
    out << dump(Json{{"instance", instance}, {"sidecar", sidecar}}, o.pretty)
        << '\n';
    return kSuccess;
  }
  write_file(o.out_prefix + ".json", dump(instance, o.pretty));
  write_file(o.out_prefix + ".sidecar.json", dump(sidecar, o.pretty));
  err << "wrote " << o.out_prefix << ".json and " << o.out_prefix
      << ".sidecar.json\n";
  return kSuccess;
}

int cmd_intervals(const Options& o, std::ostream& out) {
  const Graph h = graph_from_json(read_json_file(o.input));
  const Classification c = classify(h);
  if (const NpcCertificate* cert = c.certificate()) {
    out << dump(Json{{"verdict", "npc"}, {"certificate", to_json(*cert)}},
                o.pretty)
        << '\n';
    return kNpcTarget;
  }
  Json reps = Json::array();
  for (const auto& v : c.components) {
    reps.push_back(to_json(ordering_to_intervals(
        v.component, std::get<MinMaxOrdering>(v.verdict))));
  }
  out << dump(Json{{"verdict", "poly"}, {"representations", reps}}, o.pretty)
      << '\n';
  return kSuccess;
}

int cmd_double(const Options& o, std::ostream& out) {
  const Graph h = graph_from_json(read_json_file(o.input));
  out << dump(to_json(bipartite_double(h)), o.pretty) << '\n';
  return kSuccess;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const SelftestReport report = run_selftest(o.seed);
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  out << dump(Json{{"passed", report.passed()},
                   {"seed", o.seed},
                   {"checks", checks}},
              o.pretty)
      << '\n';
  return report.passed() ? kSuccess : kSelfCheckFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimum-cost graph homomorphism toolkit"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--pretty", o.pretty, "Indent JSON output");
  app.add_option("--seed", o.seed, "Seed for randomized self-tests");

  auto* classify_cmd = app.add_subcommand(
      "classify", "Classify a target graph (polynomial or NP-complete)");
  classify_cmd->add_option("graph", o.input, "Graph JSON file")->required();

  auto* solve_cmd =
      app.add_subcommand("solve", "Solve an instance with the min-cut solver");
  solve_cmd->add_option("instance", o.input, "Instance JSON file")->required();

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Solve an instance by exhaustive search (any target)");
  oracle_cmd->add_option("instance", o.input, "Instance JSON file")
      ->required();
  oracle_cmd->add_option("--node-limit", o.node_limit,
                         "Search nodes before giving up");

  auto* gadget_cmd = app.add_subcommand(
      "gadget", "Build a hardness gadget from a 3-partite graph");
  gadget_cmd->add_option("--kind", o.kind, "claw, net or tent")
      ->required()
      ->check(CLI::IsMember({"claw", "net", "tent"}));
  gadget_cmd->add_option("--out", o.out_prefix,
                         "Write <prefix>.json and <prefix>.sidecar.json");
  gadget_cmd->add_option("graph", o.input, "3-partite graph JSON file")
      ->required();

  auto* intervals_cmd = app.add_subcommand(
      "intervals", "Interval representation of a polynomial target");
  intervals_cmd->add_option("graph", o.input, "Graph JSON file")->required();

  auto* double_cmd =
      app.add_subcommand("double", "Bipartite double of a reflexive graph");
  double_cmd->add_option("graph", o.input, "Graph JSON file")->required();

  auto* selftest_cmd =
      app.add_subcommand("selftest", "Run the embedded invariant suite");
  selftest_cmd->add_option("--seed", o.seed, "Seed for random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, out);
    if (*solve_cmd) return cmd_solve(o, out);
    if (*oracle_cmd) return cmd_oracle(o, out);
    if (*gadget_cmd) return cmd_gadget(o, out, err);
    if (*intervals_cmd) return cmd_intervals(o, out);
    if (*double_cmd) return cmd_double(o, out);
    if (*selftest_cmd) return cmd_selftest(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_internal() ? kSelfCheckFailure : kInputError;
  }
  return kInputError;
}

}  // namespace minhom::cli
