#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualflow/rational.hpp"

namespace dualflow {

using NodeId = std::size_t;
using EdgeIndex = std::size_t;

/// Node 0 is the anchor: every point of the polyhedron has coordinate 0 there.
inline constexpr NodeId kAnchor = 0;

struct Edge {
  NodeId tail;
  NodeId head;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Directed graph with no self-loops, no repeated (tail, head) pairs and a
/// connected underlying undirected graph. Antiparallel pairs are allowed.
class Digraph {
 public:
  Digraph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  std::optional<EdgeIndex> find_edge(NodeId tail, NodeId head) const;

  /// Edges incident to `v` in either direction.
  const std::vector<EdgeIndex>& incident(NodeId v) const { return incident_.at(v); }

 private:
  std::size_t node_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
};

using CostVector = std::vector<Rational>;

/// A graph together with its cost vector: the data of one dual network flow
/// polyhedron {u : -u_tail + u_head <= cost for every edge, u_0 = 0}.
class Network {
 public:
  Network(Digraph graph, CostVector costs);

  const Digraph& graph() const { return graph_; }
  const CostVector& costs() const { return costs_; }
  const Rational& cost(EdgeIndex e) const { return costs_.at(e); }
  const Edge& edge(EdgeIndex e) const { return graph_.edge(e); }
  std::size_t node_count() const { return graph_.node_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }

 private:
  Digraph graph_;
  CostVector costs_;
};

/// Candidate member of the polyhedron; coordinate 0 is always exactly zero.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords);

  static Point origin(std::size_t node_count);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](NodeId i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  /// "(0, 2/3, 4/3, 2)"
  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// Sorted list of edge indices.
using EdgeSet = std::vector<EdgeIndex>;
using TightEdgeSet = EdgeSet;

struct SpanningTree {
  EdgeSet edge_indices;

  friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;
};

/// Union-find over node ids with path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  NodeId find(NodeId v);
  bool unite(NodeId a, NodeId b);
  std::size_t components() const { return components_; }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::size_t> rank_;
  std::size_t components_;
};

/// Number of connected components of the spanning subgraph (all nodes,
/// only the given edges), ignoring orientation.
std::size_t count_components(const Digraph& graph, std::span<const EdgeIndex> edges);

/// Component label per node for the spanning subgraph on `edges`; labels are
/// 0..k-1 in order of the smallest node of each component.
std::vector<std::size_t> component_labels(const Digraph& graph, std::span<const EdgeIndex> edges);

bool is_spanning_tree(const Digraph& graph, std::span<const EdgeIndex> edges);

/// True iff `nodes` (a membership mask) induces a connected subgraph of the
/// underlying undirected graph. The empty set is not connected.
bool induces_connected(const Digraph& graph, const std::vector<bool>& nodes);

}  // namespace dualflow

template <>
struct std::hash<dualflow::Point> {
  std::size_t operator()(const dualflow::Point& p) const noexcept { return p.hash(); }
};
