#include "dualflow/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "dualflow/error.hpp"

namespace dualflow {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": bad node index '" +
                                            std::string(token) + "'");
  }
  return value;
}

[[noreturn]] void syntax(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Network parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> node_count;
  std::vector<Edge> edges;
  CostVector costs;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (!node_count) {
      if (tokens[0] != "nodes" || tokens.size() != 2) syntax(line_no, "expected 'nodes N'");
      node_count = parse_index(tokens[1], line_no);
      if (*node_count == 0) {
        throw Error(ErrorCode::ValidationError, "graph must contain node 0 (nodes N with N >= 1)");
      }
      continue;
    }
    if (tokens[0] != "edge" || tokens.size() != 4) syntax(line_no, "expected 'edge TAIL HEAD COST'");
    const NodeId tail = parse_index(tokens[1], line_no);
    const NodeId head = parse_index(tokens[2], line_no);
    if (tail >= *node_count || head >= *node_count) {
      throw Error(ErrorCode::ValidationError,
                  "line " + std::to_string(line_no) + ": node index out of range");
    }
    Rational cost;
    try {
      cost = Rational::parse(tokens[3]);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    edges.push_back({tail, head});
    costs.push_back(std::move(cost));
  }
  if (!node_count) throw Error(ErrorCode::SyntaxError, "missing 'nodes N' line");
  return Network(Digraph(*node_count, std::move(edges)), std::move(costs));
}

Network parse_graph_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Network read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  return parse_graph(in);
}

std::string serialize_graph(const Network& network) {
  std::ostringstream os;
  os << "nodes " << network.node_count() << '\n';
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    os << "edge " << edge.tail << ' ' << edge.head << ' ' << network.cost(e) << '\n';
  }
  return os.str();
}

void write_graph_file(const std::filesystem::path& path, const Network& network) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file " + path.string());
  out << serialize_graph(network);
}

}  // namespace dualflow
