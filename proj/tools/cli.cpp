#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "dualflow/dualflow.hpp"

namespace dualflow::cli {

using nlohmann::json;

namespace {

// Bad flag values and unreadable files; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json rational_json(const Rational& r) { return r.fraction_str(); }

json point_json(const Point& p) {
  json coords = json::array();
  for (const Rational& c : p.coords()) coords.push_back(rational_json(c));
  return coords;
}

json step_json(const SignedStep& step) {
  return {{"S", step.circuit.s_set()},
          {"sign", std::string(1, sign_char(step.sign))},
          {"epsilon", rational_json(step.epsilon)},
          {"entering", step.entering_edges}};
}

json walk_json(const Network& network, const Walk& walk) {
  const WalkValidation check = validate_walk(network, walk);
  if (!check) throw std::logic_error("produced walk fails validation: " + check.violation->reason);
  json points = json::array();
  for (const Point& p : walk.points) points.push_back(point_json(p));
  json steps = json::array();
  for (const SignedStep& s : walk.steps) steps.push_back(step_json(s));
  json out{{"mode", std::string(to_string(walk.mode))},
           {"length", walk.length()},
           {"points", std::move(points)},
           {"steps", std::move(steps)},
           {"valid", true}};
  if (!walk.phases.empty()) {
    json phases = json::array();
    for (const WalkPhase& ph : walk.phases) {
      phases.push_back({{"target_edge", ph.target_edge}, {"first_step", ph.first_step}, {"steps", ph.step_count}});
    }
    out["phases"] = std::move(phases);
  }
  return out;
}

std::string edge_token(const Network& network, EdgeIndex e) {
  return "v" + std::to_string(network.edge(e).tail) + "v" + std::to_string(network.edge(e).head);
}

json tree_json(const Network& network, const SpanningTree& tree) {
  json tokens = json::array();
  for (EdgeIndex e : tree.edge_indices) tokens.push_back(edge_token(network, e));
  return tokens;
}

Network load(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw UsageError("cannot read graph file '" + path + "'");
  return read_graph_file(path);
}

SpanningTree parse_tree(const Network& network, const std::string& text) {
  static const std::regex token(R"(v(\d+)v(\d+))");
  SpanningTree tree;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::smatch m;
    if (!std::regex_match(item, m, token)) throw UsageError("bad tree edge token '" + item + "', expected vAvB");
    const NodeId tail = std::stoul(m[1]);
    const NodeId head = std::stoul(m[2]);
    auto e = tail < network.node_count() && head < network.node_count() ? network.graph().find_edge(tail, head)
                                                                          : std::nullopt;
    if (!e) throw Error(ErrorCode::EdgeMissing, "edge " + item + " is not in the graph");
    tree.edge_indices.push_back(*e);
  }
  std::sort(tree.edge_indices.begin(), tree.edge_indices.end());
  return tree;
}

Point parse_point(const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream in(text);
  try {
    for (std::string item; std::getline(in, item, ',');) coords.push_back(Rational::parse(item));
    return Point(std::move(coords));
  } catch (const Error& e) {
    throw UsageError("bad point '" + text + "': " + e.what());
  }
}

// A vertex given either as a spanning tree or as coordinates.
struct VertexArg {
  std::string tree;
  std::string point;

  void add_to(CLI::App* app, const std::string& role) {
    auto* t = app->add_option("--" + role + "-tree", tree, "Spanning tree as vAvB tokens, comma-separated");
    auto* p = app->add_option("--" + role + "-point", point, "Coordinates as comma-separated rationals");
    t->excludes(p);
    p->excludes(t);
  }

  Point resolve(const Network& network, const std::string& role) const {
    if (!tree.empty()) return vertex_from_tree(network, parse_tree(network, tree));
    if (!point.empty()) return parse_point(point);
    throw UsageError("one of --" + role + "-tree or --" + role + "-point is required");
  }
};

WalkMode parse_mode(const std::string& text) { return text == "edge" ? WalkMode::Edge : WalkMode::Circuit; }

json instance_json(const Network& network) {
  return {{"nodes", network.node_count()}, {"edges", network.edge_count()}};
}

std::string describe_walk(const Walk& walk) {
  std::ostringstream os;
  os << to_string(walk.mode) << " walk of length " << walk.length() << "\n";
  for (std::size_t i = 0; i < walk.points.size(); ++i) {
    os << "  " << walk.points[i].str();
    if (i < walk.steps.size()) {
      const SignedStep& s = walk.steps[i];
      os << "  --" << s.circuit.str() << sign_char(s.sign) << " eps=" << s.epsilon.str() << "-->";
    }
    os << "\n";
  }
  return os.str();
}

// What a subcommand produced: structured payload plus the human rendering.
struct Outcome {
  Outcome() = default;
  Outcome(json instance_, json result_, std::string text_)
      : instance(std::move(instance_)), result(std::move(result_)), text(std::move(text_)) {}

  json instance;
  json result;
  std::string text;
  bool ok = true;
  // Generators write the graph itself to -o instead of a report.
  std::optional<Network> graph;
};

struct Options {
  std::string output;
  bool json_out = false;

  std::string mode = "circuit";
  std::string file;
  std::vector<std::string> files;
  std::vector<NodeId> attach;
  std::string kind;
  std::size_t k = 1;
  std::size_t m = 2;
  std::size_t n = 2;
  std::uint64_t seed = 1;
  std::size_t leaves = 0;
  SearchLimits limits;
  std::optional<std::size_t> depth_cap;
  VertexArg source;
  VertexArg target;
};

Outcome cmd_gen(const Options& o) {
  Network network = [&] {
    if (o.kind == "example") return example_graph();
    if (o.kind == "gk") return family_gk(o.k);
    return random_complete_bipartite(o.m, o.n, o.seed);
  }();
  for (std::size_t i = 0; i < o.leaves; ++i) network = add_leaf(network, kAnchor);
  Outcome out{instance_json(network), {{"graph", serialize_graph(network)}}, serialize_graph(network)};
  out.graph = std::move(network);
  return out;
}

Outcome cmd_glue(const Options& o) {
  if (!o.attach.empty() && o.attach.size() != o.files.size()) {
    throw UsageError("--attach needs one node per input file");
  }
  GlueSpec spec;
  for (std::size_t i = 0; i < o.files.size(); ++i) {
    spec.push_back({load(o.files[i]), o.attach.empty() ? kAnchor : o.attach[i]});
  }
  GlueResult glued = glue(spec);
  json result{{"graph", serialize_graph(glued.network)}, {"node_maps", glued.node_maps}};
  std::string text = serialize_graph(glued.network);
  Outcome out{instance_json(glued.network), std::move(result), std::move(text)};
  out.graph = std::move(glued.network);
  return out;
}

Outcome cmd_perturb(const Options& o) {
  Network network = perturb_costs(load(o.file), o.seed);
  Outcome out{instance_json(network), {{"graph", serialize_graph(network)}}, serialize_graph(network)};
  out.graph = std::move(network);
  return out;
}

Outcome cmd_vertices(const Options& o) {
  const Network network = load(o.file);
  const VertexSet vs = enumerate_vertices(network, o.limits.max_trees);
  const DegeneracyReport degeneracy = degeneracy_report(network, vs);
  json list = json::array();
  std::ostringstream text;
  text << vs.size() << " vertices (" << (degeneracy.nondegenerate ? "nondegenerate" : "degenerate") << ")\n";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const TightEdgeSet tight = tight_graph(network, vs.vertices[i]);
    json trees = json::array();
    for (const SpanningTree& t : vs.tree_witnesses[i]) trees.push_back(tree_json(network, t));
    list.push_back({{"point", point_json(vs.vertices[i])}, {"tight_edges", tight}, {"trees", std::move(trees)}});
    text << "  " << vs.vertices[i].str() << "  tight=" << tight.size() << "\n";
  }
  return {instance_json(network),
          {{"count", vs.size()}, {"nondegenerate", degeneracy.nondegenerate}, {"vertices", std::move(list)}},
          text.str()};
}

Outcome cmd_distance(const Options& o) {
  const Network network = load(o.file);
  const Point u = o.source.resolve(network, "source");
  const Point v = o.target.resolve(network, "target");
  const WalkMode mode = parse_mode(o.mode);
  const DistanceResult d =
      mode == WalkMode::Edge ? combinatorial_distance(network, u, v, o.limits) : circuit_distance(network, u, v, o.limits);
  return {instance_json(network),
          {{"mode", o.mode}, {"distance", d.length}, {"walk", walk_json(network, d.walk)}},
          o.mode + " distance " + std::to_string(d.length) + "\n" + describe_walk(d.walk)};
}

Outcome cmd_diameter(const Options& o) {
  const Network network = load(o.file);
  const DiameterResult d = diameter(network, parse_mode(o.mode), o.limits);
  return {instance_json(network),
          {{"mode", o.mode},
           {"diameter", d.value},
           {"from", point_json(d.from)},
           {"to", point_json(d.to)},
           {"walk", walk_json(network, d.walk)}},
          o.mode + " diameter " + std::to_string(d.value) + " from " + d.from.str() + " to " + d.to.str() + "\n" +
              describe_walk(d.walk)};
}

Outcome cmd_walk(const Options& o) {
  const Network network = load(o.file);
  const Point u = o.source.resolve(network, "source");
  const Point v = o.target.resolve(network, "target");
  const WalkMode mode = parse_mode(o.mode);
  const Walk walk = mode == WalkMode::Edge ? edge_walk(network, u, v) : circuit_walk(network, u, v);
  const std::size_t bound =
      mode == WalkMode::Edge ? edge_bound(network.node_count(), network.edge_count()) : circuit_bound(network.node_count());
  return {instance_json(network),
          {{"mode", o.mode}, {"length", walk.length()}, {"bound", bound}, {"walk", walk_json(network, walk)}},
          describe_walk(walk)};
}

Outcome cmd_neighbors(const Options& o) {
  const Network network = load(o.file);
  const Point u = o.source.resolve(network, "source");
  json list = json::array();
  std::ostringstream text;
  for (const CircuitNeighbor& nb : first_circuit_neighbors(network, u)) {
    json steps = json::array();
    for (const SignedStep& s : nb.steps) steps.push_back(step_json(s));
    list.push_back({{"point", point_json(nb.point)}, {"steps", std::move(steps)}});
    const SignedStep& first = nb.steps.front();
    text << "  " << first.circuit.str() << sign_char(first.sign) << " eps=" << first.epsilon.str() << " -> "
         << nb.point.str() << "\n";
  }
  return {instance_json(network), {{"count", list.size()}, {"neighbors", std::move(list)}}, text.str()};
}

Outcome cmd_verify(const Options& o) {
  const Network network = o.file.empty() ? example_graph() : load(o.file);
  json checks = json::array();
  std::ostringstream text;
  bool all = true;
  for (const CheckResult& c : verify_example(network)) {
    all = all && c.passed;
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    text << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  Outcome out{instance_json(network), {{"checks", std::move(checks)}, {"passed", all}}, text.str()};
  out.ok = all;
  return out;
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

std::vector<CheckResult> verify_example(const Network& network) {
  const Point u1(std::vector<Rational>{0, 0, 0, 0});
  const Point u2(std::vector<Rational>{0, Rational(2, 3), Rational(4, 3), 2});
  auto tree = [&](std::vector<Edge> edges) {
    SpanningTree t;
    for (const Edge& e : edges) {
      auto idx = network.graph().find_edge(e.tail, e.head);
      if (!idx) throw Error(ErrorCode::EdgeMissing, "missing edge " + std::to_string(e.tail) + "->" + std::to_string(e.head));
      t.edge_indices.push_back(*idx);
    }
    std::sort(t.edge_indices.begin(), t.edge_indices.end());
    return t;
  };
  auto pt = [](std::vector<Rational> c) { return Point(std::move(c)); };

  std::vector<CheckResult> results;
  auto check = [&](std::string name, auto&& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.passed = body(r.detail);
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  };

  check("tree-vertices", [&](std::string& detail) {
    const Point a = vertex_from_tree(network, tree({{3, 0}, {2, 0}, {3, 1}}));
    const Point b = vertex_from_tree(network, tree({{0, 3}, {0, 2}, {1, 3}}));
    detail = "T1 -> " + a.str() + ", T2 -> " + b.str();
    return a == u1 && b == u2;
  });

  check("edge-walk", [&](std::string& detail) {
    const Walk walk = walk_from_points(network,
                                       {u1, pt({0, 1, 0, 1}), pt({0, 1, Rational(4, 3), 1}),
                                        pt({0, 1, Rational(4, 3), 2}), u2},
                                       WalkMode::Edge);
    const WalkValidation v = validate_walk(network, walk);
    if (!v) detail = v.violation->reason;
    return v.valid() && walk.length() == 4;
  });

  check("first-circuit-steps", [&](std::string& detail) {
    const std::vector<Point> differences{
        pt({0, Rational(5, 3), Rational(4, 3), 2}), pt({0, Rational(2, 3), Rational(1, 3), 2}),
        pt({0, Rational(2, 3), Rational(4, 3), Rational(8, 9)}), pt({0, Rational(-1, 3), Rational(4, 3), 1}),
        pt({0, Rational(2, 3), Rational(1, 3), 1}), pt({0, Rational(-1, 3), Rational(1, 3), 1})};
    const auto neighbors = first_circuit_neighbors(network, u1);
    detail = std::to_string(neighbors.size()) + " destinations";
    if (neighbors.size() != differences.size()) return false;
    for (std::size_t i = 0; i < neighbors.size(); ++i) {
      std::vector<Rational> d;
      for (NodeId v = 0; v < u2.size(); ++v) d.push_back(u2[v] - neighbors[i].point[v]);
      if (Point(std::move(d)) != differences[i]) {
        detail = "y" + std::to_string(i + 1) + " = " + neighbors[i].point.str() + " differs";
        return false;
      }
    }
    return true;
  });

  check("inapplicable-partition", [&](std::string& detail) {
    const PartitionCircuit s({1, 2});
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      try {
        max_step(network, u1, s, sign);
        detail = std::string("sign ") + sign_char(sign) + " applies";
        return false;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotApplicable) throw;
      }
    }
    return true;
  });

  check("circuit-distance", [&](std::string& detail) {
    const DistanceResult d = circuit_distance(network, u1, u2);
    detail = "distance " + std::to_string(d.length);
    return d.length == 4;
  });

  return results;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on dual network flow polyhedra"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-o,--output", o.output, "Write the graph (gen, glue, perturb) or the report to FILE");
  app.add_flag("--json", o.json_out, "Emit a JSON report");

  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "edge or circuit")->required()->check(CLI::IsMember({"edge", "circuit"}));
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--trees", o.limits.max_trees, "Spanning-tree enumeration cap");
    sub->add_option("--states", o.limits.max_states, "Circuit search state cap");
    sub->add_option("--cap", o.depth_cap, "Circuit search depth cap (default |V|(|V|-1)/2)");
    sub->add_option("--threads", o.limits.threads, "Worker threads for diameter");
  };

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("kind", o.kind, "example, gk or bipartite")->required()->check(CLI::IsMember({"example", "gk", "bipartite"}));
  gen->add_option("--k", o.k, "Number of glued copies for gk")->check(CLI::PositiveNumber);
  gen->add_option("--m", o.m, "Left side size for bipartite")->check(CLI::PositiveNumber);
  gen->add_option("--n", o.n, "Right side size for bipartite")->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Seed for random costs");
  gen->add_option("--leaves", o.leaves, "Append this many cost-0 leaves at node 0");

  auto* glue_cmd = app.add_subcommand("glue", "Glue instances at their attach nodes");
  glue_cmd->add_option("files", o.files, "Graph files")->required();
  glue_cmd->add_option("--attach", o.attach, "Attach node per file (default 0)")->delimiter(',');

  auto* perturb = app.add_subcommand("perturb", "Add tiny seeded offsets to all costs");
  perturb->add_option("file", o.file, "Graph file")->required();
  perturb->add_option("--seed", o.seed, "Seed");

  auto* vertices = app.add_subcommand("vertices", "List vertices with tight sets and witness trees");
  vertices->add_option("file", o.file, "Graph file")->required();
  vertices->add_option("--trees", o.limits.max_trees, "Spanning-tree enumeration cap");

  auto* distance = app.add_subcommand("distance", "Shortest edge or circuit walk between two vertices");
  distance->add_option("file", o.file, "Graph file")->required();
  add_mode(distance);
  add_limits(distance);
  o.source.add_to(distance, "source");
  o.target.add_to(distance, "target");

  auto* diam = app.add_subcommand("diameter", "Edge or circuit diameter");
  diam->add_option("file", o.file, "Graph file")->required();
  add_mode(diam);
  add_limits(diam);

  auto* walk = app.add_subcommand("walk", "Constructive walk by target-tree insertion");
  walk->add_option("file", o.file, "Graph file")->required();
  add_mode(walk);
  o.source.add_to(walk, "source");
  o.target.add_to(walk, "target");

  auto* neighbors = app.add_subcommand("neighbors", "All maximal circuit steps from a point");
  neighbors->add_option("file", o.file, "Graph file")->required();
  o.source.add_to(neighbors, "source");

  auto* verify = app.add_subcommand("verify-example", "Run the frozen checks on the 4-node example");
  verify->add_option("file", o.file, "Variant of the example with the same edges (default: built in)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  }
  o.limits.depth_cap = o.depth_cap;

  const std::string command = app.get_subcommands().front()->get_name();
  json report{{"command", joined(args)}, {"instance", nullptr}, {"result", nullptr}, {"status", "ok"}};
  Outcome outcome;
  int code = kExitOk;
  try {
    if (command == "gen") outcome = cmd_gen(o);
    else if (command == "glue") outcome = cmd_glue(o);
    else if (command == "perturb") outcome = cmd_perturb(o);
    else if (command == "vertices") outcome = cmd_vertices(o);
    else if (command == "distance") outcome = cmd_distance(o);
    else if (command == "diameter") outcome = cmd_diameter(o);
    else if (command == "walk") outcome = cmd_walk(o);
    else if (command == "neighbors") outcome = cmd_neighbors(o);
    else outcome = cmd_verify(o);
    report["instance"] = outcome.instance;
    report["result"] = outcome.result;
    if (!outcome.ok) {
      report["status"] = "error";
      report["error"] = {{"code", "CheckFailed"}, {"message", "some checks failed"}};
      code = kExitDomainError;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    outcome.text = std::string("error ") + std::string(to_string(e.code())) + ": " + e.what() + "\n";
    code = kExitDomainError;
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["error"] = {{"code", "InternalError"}, {"message", e.what()}};
    outcome.text = std::string("internal error: ") + e.what() + "\n";
    code = kExitDomainError;
  }

  std::ostream* sink = &out;
  std::ofstream file;
  if (!o.output.empty()) {
    if (outcome.graph) {
      write_graph_file(o.output, *outcome.graph);
      outcome.text = "wrote " + o.output + "\n";
    } else {
      file.open(o.output);
      if (!file) {
        err << "error: cannot write '" << o.output << "'\n";
        return kExitUsageError;
      }
      sink = &file;
    }
  }
  if (o.json_out) {
    *sink << report.dump(2) << "\n";
  } else {
    *sink << outcome.text;
  }
  return code;
}

}  // namespace dualflow::cli
