#include "dualflow/polyhedron.hpp"

#include <algorithm>
#include <random>

#include "dualflow/error.hpp"

namespace dualflow {

namespace {

void check_dimension(const Network& network, const Point& u) {
  if (u.size() != network.node_count()) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(u.size()) +
                                                  " coordinates, graph has " +
                                                  std::to_string(network.node_count()) + " nodes");
  }
}

}  // namespace

Rational slack(const Network& network, const Point& u, EdgeIndex e) {
  const Edge& edge = network.edge(e);
  return network.cost(e) + u[edge.tail] - u[edge.head];
}

bool is_feasible(const Network& network, const Point& u) {
  check_dimension(network, u);
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    if (slack(network, u, e).sign() < 0) return false;
  }
  return true;
}

FeasibilityStatus feasibility_status(const Network& network) {
  const std::size_t n = network.node_count();
  // Virtual source with zero-cost arcs to every node: all labels start at 0.
  std::vector<Rational> dist(n);
  std::vector<std::optional<EdgeIndex>> pred(n);
  std::optional<NodeId> updated;
  for (std::size_t round = 0; round < n; ++round) {
    updated.reset();
    for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
      const Edge& edge = network.edge(e);
      Rational candidate = dist[edge.tail] + network.cost(e);
      if (candidate < dist[edge.head]) {
        dist[edge.head] = std::move(candidate);
        pred[edge.head] = e;
        updated = edge.head;
      }
    }
    if (!updated) break;
  }

  FeasibilityStatus status;
  if (!updated) {
    status.feasible = true;
    const Rational shift = dist[kAnchor];
    for (auto& d : dist) d -= shift;
    status.witness = Point(std::move(dist));
    return status;
  }

  // Still relaxing after n rounds: walk predecessors n times to land on the cycle.
  NodeId v = *updated;
  for (std::size_t i = 0; i < n; ++i) v = network.edge(*pred[v]).tail;
  const NodeId start = v;
  do {
    const EdgeIndex e = *pred[v];
    status.negative_cycle.push_back(e);
    v = network.edge(e).tail;
  } while (v != start);
  std::reverse(status.negative_cycle.begin(), status.negative_cycle.end());
  return status;
}

TightEdgeSet tight_graph(const Network& network, const Point& u) {
  check_dimension(network, u);
  TightEdgeSet tight;
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    const int s = slack(network, u, e).sign();
    if (s < 0) throw Error(ErrorCode::InfeasiblePoint, "point " + u.str() + " is infeasible");
    if (s == 0) tight.push_back(e);
  }
  return tight;
}

namespace {

// Solves u along the tree from the anchor; the tree is assumed spanning.
std::vector<Rational> solve_tree(const Network& network, std::span<const EdgeIndex> tree) {
  const std::size_t n = network.node_count();
  std::vector<std::vector<EdgeIndex>> adjacent(n);
  for (EdgeIndex e : tree) {
    adjacent[network.edge(e).tail].push_back(e);
    adjacent[network.edge(e).head].push_back(e);
  }
  std::vector<Rational> coords(n);
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{kAnchor};
  seen[kAnchor] = true;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : adjacent[v]) {
      const Edge& edge = network.edge(e);
      if (edge.tail == v && !seen[edge.head]) {
        coords[edge.head] = coords[v] + network.cost(e);
        seen[edge.head] = true;
        stack.push_back(edge.head);
      } else if (edge.head == v && !seen[edge.tail]) {
        coords[edge.tail] = coords[v] - network.cost(e);
        seen[edge.tail] = true;
        stack.push_back(edge.tail);
      }
    }
  }
  return coords;
}

}  // namespace

std::optional<Point> tree_point_if_feasible(const Network& network, std::span<const EdgeIndex> tree) {
  Point u(solve_tree(network, tree));
  if (!is_feasible(network, u)) return std::nullopt;
  return u;
}

Point vertex_from_tree(const Network& network, const SpanningTree& tree) {
  if (!is_spanning_tree(network.graph(), tree.edge_indices)) {
    throw Error(ErrorCode::ValidationError, "edge list is not a spanning tree");
  }
  Point u(solve_tree(network, tree.edge_indices));
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    if (slack(network, u, e).sign() < 0) {
      const Edge& edge = network.edge(e);
      throw Error(ErrorCode::InfeasibleTree, "tree point " + u.str() + " violates edge " +
                                                 std::to_string(edge.tail) + "->" +
                                                 std::to_string(edge.head));
    }
  }
  return u;
}

bool is_vertex(const Network& network, const Point& u) {
  const TightEdgeSet tight = tight_graph(network, u);
  return count_components(network.graph(), tight) == 1;
}

Network perturb_costs(const Network& network, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(1, 999);
  CostVector costs = network.costs();
  for (auto& c : costs) c += Rational(dist(rng), 1'000'000'000);
  return Network(network.graph(), std::move(costs));
}

}  // namespace dualflow
