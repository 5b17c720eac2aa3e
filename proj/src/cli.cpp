#include "confspace/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "confspace/complex.hpp"
#include "confspace/edge_path.hpp"
#include "confspace/errors.hpp"
#include "confspace/graph.hpp"
#include "confspace/homology.hpp"
#include "confspace/json_io.hpp"
#include "confspace/retraction.hpp"
#include "confspace/witness.hpp"

namespace confspace {

namespace {

// Input problems that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph_file;
  int n = 0;
  std::string labeling = "unordered";
  std::string json_out;
  std::size_t cell_cap = default_cell_cap;

  std::string criterion = "improved";
  std::string out_file;
  std::optional<EdgeId> edge;
  std::size_t times = 1;
  std::string kind;
  std::optional<std::size_t> path_index;
  std::string cycle;
  std::string mode = "full";
  std::string aux;
  std::string config_file;
  std::string delta = "1/4";
};

struct Outcome {
  Json payload;
  bool ok = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

int require_n(const Options& o) {
  if (o.n < 1) throw UsageError("-n must be given and at least 1");
  return o.n;
}

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("malformed ") + what + " list '" + text + "'");
    }
  }
  return out;
}

Json surrogate_note() {
  return Json{{"kind", "homology surrogate"},
              {"note",
               "integer homology of the cube complex and validity of edge paths stand in for fundamental-group "
               "statements, which are not computed"}};
}

Outcome cmd_check(const Graph& g, const Options& o) {
  const auto criterion = o.criterion == "original" ? Criterion::original : Criterion::improved;
  const auto report = check_sufficient(g, require_n(o), criterion);
  return {to_json(report), report.passes};
}

Outcome cmd_subdivide(const Graph& g, const Options& o) {
  Json j;
  Graph result;
  if (o.edge) {
    result = subdivide_edge(g, *o.edge, o.times);
    j["edge"] = *o.edge;
    j["times"] = o.times;
  } else {
    result = sufficiently_subdivide(g, require_n(o));
    j["n"] = o.n;
  }
  const std::string text = result.to_text();
  if (!o.out_file.empty()) write_file(o.out_file, text);
  j["vertex_count"] = result.vertex_count();
  j["edge_count"] = result.edge_count();
  j["graph_hash"] = graph_hash(result);
  j["graph"] = text;
  if (o.n >= 1) j["sufficiency"] = to_json(check_sufficient(result, o.n));
  return {j, true};
}

Outcome cmd_build(const Graph& g, const Options& o) {
  const auto k = build_complex(g, require_n(o), parse_labeling(o.labeling), o.cell_cap);
  if (!o.out_file.empty()) write_file(o.out_file, complex_json(k, true).dump(1) + "\n");
  return {complex_json(k), true};
}

Outcome cmd_homology(const Graph& g, const Options& o) {
  const auto k = build_complex(g, require_n(o), parse_labeling(o.labeling), o.cell_cap);
  Json j = complex_json(k);
  j["homology"] = to_json(homology(k));
  j["surrogate"] = surrogate_note();
  return {j, true};
}

std::optional<EssentialPath> pick_path(const Graph& g, const Options& o, bool case1) {
  const auto paths = essential_path_decomposition(g);
  if (o.path_index) {
    if (*o.path_index >= paths.size())
      throw UsageError("--path " + std::to_string(*o.path_index) + " out of range (" + std::to_string(paths.size()) +
                       " essential paths)");
    return paths[*o.path_index];
  }
  for (const auto& p : paths) {
    if (p.no_essential_vertices || p.is_closed() || p.length() + 2 > static_cast<std::size_t>(o.n)) continue;
    const bool leaf = g.degree(p.start) == 1 || g.degree(p.end) == 1;
    const bool both_branch = g.degree(p.start) >= 3 && g.degree(p.end) >= 3;
    if (case1 ? leaf : both_branch) return p;
  }
  return std::nullopt;
}

Outcome cmd_witness(const Graph& g, const Options& o) {
  const int n = require_n(o);
  const Labeling labeling = parse_labeling(o.labeling);
  Json j;
  j["kind"] = o.kind;
  j["n"] = n;
  EdgePath path;
  const Graph* model = &g;
  Graph fine;

  if (o.kind == "rotation") {
    const RotationMode mode = parse_rotation_mode(o.mode);
    std::vector<EdgeId> cycle;
    if (!o.cycle.empty()) {
      for (auto e : parse_list(o.cycle, "cycle")) cycle.push_back(static_cast<EdgeId>(e));
    } else {
      const auto gr = girth(g);
      if (gr.infinite()) throw ConstructionError("graph has no cycle");
      cycle = gr.cycle;
    }
    j["mode"] = std::string(to_string(mode));
    j["cycle"] = cycle;
    path = rotation_loop(g, cycle, n, mode);
  } else if (o.kind == "case2") {
    const auto gamma = pick_path(g, o, false);
    if (!gamma)
      throw ConstructionError("no essential path of length at most n-2 with both endpoints of degree at least 3");
    std::optional<Case2Aux> aux;
    if (!o.aux.empty()) {
      const auto a = parse_list(o.aux, "auxiliary edge");
      if (a.size() != 4) throw UsageError("--aux needs four edge ids e1,e2,f1,f2");
      aux = Case2Aux{static_cast<EdgeId>(a[0]), static_cast<EdgeId>(a[1]), static_cast<EdgeId>(a[2]),
                     static_cast<EdgeId>(a[3])};
    }
    const auto w = case2_witness_loop(g, *gamma, n, aux);
    j["essential_path"] = to_json(*gamma);
    j["aux"] = {{"e1", w.aux.e1}, {"e2", w.aux.e2}, {"f1", w.aux.f1}, {"f2", w.aux.f2}};
    j["vertices"] = {{"w1", w.w1}, {"w2", w.w2}, {"z1", w.z1}, {"z2", w.z2}};
    path = w.path;
  } else if (o.kind == "case1") {
    const auto gamma = pick_path(g, o, true);
    if (!gamma) throw ConstructionError("no essential path of length at most n-2 with an endpoint of degree 1");
    auto w = case1_dance_loop(g, *gamma, n);
    fine = std::move(w.fine_graph);
    model = &fine;
    j["essential_path"] = to_json(*gamma);
    j["fine_graph"] = {{"graph_hash", graph_hash(fine)},
                       {"vertex_count", fine.vertex_count()},
                       {"edge_count", fine.edge_count()},
                       {"graph", fine.to_text()}};
    path = w.path;
  } else {
    throw UsageError("--kind must be case1, case2 or rotation");
  }

  j["edge_path"] = to_json(path);
  j["move_count"] = path.moves.size();
  const auto k = build_complex(*model, n, labeling, o.cell_cap);
  const auto check = validate_path(path, k);
  j["validation"] = {{"labeling", std::string(to_string(labeling))},
                     {"valid", check.valid},
                     {"reason", check.reason},
                     {"step", check.step ? Json(*check.step) : Json(nullptr)}};
  if (check.valid && path.loop) {
    const auto cls = cycle_homology_class(k, to_chain(path, k));
    j["homology_class"] = {{"is_cycle", cls.is_cycle}, {"is_boundary", cls.is_boundary}};
  } else {
    j["homology_class"] = nullptr;
  }
  j["surrogate"] = surrogate_note();
  return {j, check.valid};
}

Outcome cmd_phi(const Graph& g, const Options& o, const std::string& config_text) {
  Json parsed;
  try {
    parsed = Json::parse(config_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(0, std::string("configuration JSON: ") + e.what());
  }
  const auto x = configuration_from_json(parsed, g);
  mpq_class delta;
  if (delta.set_str(o.delta, 10) != 0) throw UsageError("malformed --delta '" + o.delta + "'");
  delta.canonicalize();
  return {phi_json(x, decompose(g, delta)), true};
}

Json error_payload(const std::exception& e) {
  Json j{{"message", e.what()}};
  if (dynamic_cast<const NoCombinatorics*>(&e)) {
    j["type"] = "no_combinatorics";
    j["token"] = dynamic_cast<const NoCombinatorics&>(e).token();
  } else if (dynamic_cast<const NotSufficientlySubdivided*>(&e)) {
    j["type"] = "not_sufficiently_subdivided";
  } else if (dynamic_cast<const ConstructionError*>(&e)) {
    j["type"] = "construction_error";
  } else if (dynamic_cast<const CapExceeded*>(&e)) {
    j["type"] = "cap_exceeded";
  } else if (dynamic_cast<const DisconnectedGraph*>(&e)) {
    j["type"] = "disconnected_graph";
  } else {
    j["type"] = "error";
  }
  return Json{{"error", j}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Discretized configuration spaces of graphs", "confspace"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("-g,--graph", o.graph_file, "graph file");
  app.add_option("-n,--tokens", o.n, "number of tokens");
  app.add_option("--labeling", o.labeling, "ordered or unordered")->check(CLI::IsMember({"ordered", "unordered"}));
  app.add_option("--json", o.json_out, "also write the run report to this file");
  app.add_option("--cell-cap", o.cell_cap, "maximum number of 0-cells");

  auto* check = app.add_subcommand("check", "sufficiency check");
  check->add_option("--criterion", o.criterion)->check(CLI::IsMember({"improved", "original"}));
  auto* subdivide = app.add_subcommand("subdivide", "subdivide one edge, or sufficiently for n tokens");
  subdivide->add_option("--edge", o.edge, "edge to subdivide");
  subdivide->add_option("--times", o.times, "new vertices on the edge");
  subdivide->add_option("--out", o.out_file, "write the resulting graph file");
  auto* build = app.add_subcommand("build", "build the cube complex");
  build->add_option("--out", o.out_file, "write cells and boundary matrices as JSON");
  app.add_subcommand("homology", "integer homology of the cube complex");
  auto* witness = app.add_subcommand("witness", "witness loops");
  witness->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"case1", "case2", "rotation"}));
  witness->add_option("--path", o.path_index, "index into the essential path decomposition");
  witness->add_option("--cycle", o.cycle, "comma-separated cycle edges (default: a shortest cycle)");
  witness->add_option("--mode", o.mode, "rotation mode")->check(CLI::IsMember({"unit", "full"}));
  witness->add_option("--aux", o.aux, "case2 auxiliary edges e1,e2,f1,f2");
  auto* phi = app.add_subcommand("phi", "standard vertex of a configuration");
  phi->add_option("--config", o.config_file, "configuration JSON file")->required();
  phi->add_option("--delta", o.delta, "S_delta radius as p/q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  const std::string command = app.get_subcommands().front()->get_name();
  Json report;
  report["command"] = command;
  std::vector<std::string> args(argv + 1, argv + argc);
  report["args"] = args;

  Outcome outcome;
  int code = 0;
  try {
    if (o.graph_file.empty()) throw UsageError("-g <graph file> is required");
    const std::string graph_text = read_file(o.graph_file);
    std::string hashed = graph_text;
    std::string config_text;
    if (command == "phi") {
      config_text = read_file(o.config_file);
      hashed += config_text;
    }
    report["input_hash"] = fnv1a_hex(hashed);
    const Graph g = parse_graph(graph_text);
    report["graph_hash"] = graph_hash(g);

    if (command == "check")
      outcome = cmd_check(g, o);
    else if (command == "subdivide")
      outcome = cmd_subdivide(g, o);
    else if (command == "build")
      outcome = cmd_build(g, o);
    else if (command == "homology")
      outcome = cmd_homology(g, o);
    else if (command == "witness")
      outcome = cmd_witness(g, o);
    else
      outcome = cmd_phi(g, o, config_text);
    code = outcome.ok ? 0 : 1;
  } catch (const UsageError& e) {
    err << "confspace: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "confspace: parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "confspace: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "confspace: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "confspace: " << e.what() << '\n';
    outcome = {error_payload(e), false};
    code = 1;
  }

  report["status"] = code == 0 ? "ok" : "fail";
  report["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  report["payload"] = outcome.payload;
  const std::string text = report.dump(2) + "\n";
  out << text;
  if (!o.json_out.empty()) {
    try {
      write_file(o.json_out, text);
    } catch (const UsageError& e) {
      err << "confspace: " << e.what() << '\n';
      return 2;
    }
  }
  return code;
}

}  // namespace confspace
