#include "dualflow/network.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dualflow/error.hpp"

namespace dualflow {

Digraph::Digraph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)), incident_(node_count) {
  if (node_count_ == 0) throw Error(ErrorCode::ValidationError, "graph needs at least one node");
  std::set<Edge> seen;
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.tail >= node_count_ || edge.head >= node_count_) {
      throw Error(ErrorCode::ValidationError,
                  "edge " + std::to_string(edge.tail) + "->" + std::to_string(edge.head) +
                      " references a node outside 0.." + std::to_string(node_count_ - 1));
    }
    if (edge.tail == edge.head) {
      throw Error(ErrorCode::ValidationError, "self-loop at node " + std::to_string(edge.tail));
    }
    if (!seen.insert(edge).second) {
      throw Error(ErrorCode::ValidationError, "duplicate edge " + std::to_string(edge.tail) +
                                                  "->" + std::to_string(edge.head));
    }
    incident_[edge.tail].push_back(e);
    incident_[edge.head].push_back(e);
  }
  std::vector<EdgeIndex> all(edges_.size());
  std::iota(all.begin(), all.end(), 0);
  if (count_components(*this, all) != 1) {
    throw Error(ErrorCode::ValidationError, "underlying undirected graph is disconnected");
  }
}

std::optional<EdgeIndex> Digraph::find_edge(NodeId tail, NodeId head) const {
  if (tail >= node_count_) return std::nullopt;
  for (EdgeIndex e : incident_[tail]) {
    if (edges_[e].tail == tail && edges_[e].head == head) return e;
  }
  return std::nullopt;
}

Network::Network(Digraph graph, CostVector costs) : graph_(std::move(graph)), costs_(std::move(costs)) {
  if (costs_.size() != graph_.edge_count()) {
    throw Error(ErrorCode::DimensionMismatch, "cost vector has " + std::to_string(costs_.size()) +
                                                  " entries for " +
                                                  std::to_string(graph_.edge_count()) + " edges");
  }
}

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::DimensionMismatch, "point has no coordinates");
  if (!coords_[kAnchor].is_zero()) {
    throw Error(ErrorCode::ValidationError, "anchor coordinate must be 0, got " + coords_[0].str());
  }
}

Point Point::origin(std::size_t node_count) { return Point(std::vector<Rational>(node_count)); }

std::string Point::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::size_t Point::hash() const {
  std::size_t h = coords_.size();
  for (const auto& c : coords_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

NodeId DisjointSets::find(NodeId v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool DisjointSets::unite(NodeId a, NodeId b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

std::size_t count_components(const Digraph& graph, std::span<const EdgeIndex> edges) {
  DisjointSets sets(graph.node_count());
  for (EdgeIndex e : edges) sets.unite(graph.edge(e).tail, graph.edge(e).head);
  return sets.components();
}

std::vector<std::size_t> component_labels(const Digraph& graph, std::span<const EdgeIndex> edges) {
  const std::size_t n = graph.node_count();
  DisjointSets sets(n);
  for (EdgeIndex e : edges) sets.unite(graph.edge(e).tail, graph.edge(e).head);
  std::vector<std::size_t> label_of_root(n, n);
  std::vector<std::size_t> labels(n);
  std::size_t next = 0;
  for (NodeId v = 0; v < n; ++v) {
    const NodeId root = sets.find(v);
    if (label_of_root[root] == n) label_of_root[root] = next++;
    labels[v] = label_of_root[root];
  }
  return labels;
}

bool is_spanning_tree(const Digraph& graph, std::span<const EdgeIndex> edges) {
  if (edges.size() + 1 != graph.node_count()) return false;
  DisjointSets sets(graph.node_count());
  for (EdgeIndex e : edges) {
    if (e >= graph.edge_count()) return false;
    if (!sets.unite(graph.edge(e).tail, graph.edge(e).head)) return false;
  }
  return sets.components() == 1;
}

bool induces_connected(const Digraph& graph, const std::vector<bool>& nodes) {
  const std::size_t n = graph.node_count();
  NodeId start = n;
  std::size_t members = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (nodes[v]) {
      if (start == n) start = v;
      ++members;
    }
  }
  if (members == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{start};
  seen[start] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : graph.incident(v)) {
      const Edge& edge = graph.edge(e);
      const NodeId w = edge.tail == v ? edge.head : edge.tail;
      if (nodes[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == members;
}

}  // namespace dualflow
