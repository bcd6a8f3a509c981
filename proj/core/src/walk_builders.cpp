#include "dualflow/walk_builders.hpp"

#include <deque>
#include <stdexcept>

#include "dualflow/contraction.hpp"
#include "dualflow/error.hpp"
#include "dualflow/polyhedron.hpp"
#include "dualflow/skeleton.hpp"
#include "dualflow/vertices.hpp"

namespace dualflow {

TreeSplit last_backward_edge(const Digraph& graph, const SpanningTree& tree, NodeId r, NodeId s) {
  const std::size_t n = graph.node_count();
  if (r == s || r >= n || s >= n) throw Error(ErrorCode::ValidationError, "r and s must be distinct nodes");
  if (!is_spanning_tree(graph, tree.edge_indices)) {
    throw Error(ErrorCode::ValidationError, "edge list is not a spanning tree");
  }
  std::vector<std::vector<EdgeIndex>> adjacent(n);
  for (EdgeIndex e : tree.edge_indices) {
    adjacent[graph.edge(e).tail].push_back(e);
    adjacent[graph.edge(e).head].push_back(e);
  }
  auto other = [&](EdgeIndex e, NodeId v) {
    return graph.edge(e).tail == v ? graph.edge(e).head : graph.edge(e).tail;
  };

  // Root the tree at s.
  constexpr EdgeIndex kNone = static_cast<EdgeIndex>(-1);
  std::vector<EdgeIndex> up(n, kNone);
  std::vector<bool> seen(n, false);
  std::deque<NodeId> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (EdgeIndex e : adjacent[v]) {
      const NodeId w = other(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      up[w] = e;
      queue.push_back(w);
    }
  }

  // Walk r -> s; an edge points away from s when its tail is the node nearer s.
  std::optional<EdgeIndex> last;
  for (NodeId v = r; v != s;) {
    const EdgeIndex e = up[v];
    const NodeId nearer = other(e, v);
    if (graph.edge(e).tail == nearer) last = e;
    v = nearer;
  }
  if (!last) {
    throw Error(ErrorCode::NoBackwardEdge, "tree contains a directed path from " + std::to_string(r) +
                                               " to " + std::to_string(s));
  }

  TreeSplit split{*last, std::vector<bool>(n, false)};
  std::vector<NodeId> stack{s};
  split.in_s[s] = true;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : adjacent[v]) {
      if (e == *last) continue;
      const NodeId w = other(e, v);
      if (!split.in_s[w]) {
        split.in_s[w] = true;
        stack.push_back(w);
      }
    }
  }
  return split;
}

std::pair<PartitionCircuit, Sign> build_insertion_partition(const Network& network, const Point& y,
                                                            EdgeIndex rs) {
  if (rs >= network.edge_count()) throw Error(ErrorCode::EdgeMissing, "edge index out of range");
  const TightEdgeSet tight = tight_graph(network, y);
  if (slack(network, y, rs).is_zero()) {
    throw Error(ErrorCode::ValidationError, "target edge is already tight");
  }
  const std::size_t n = network.node_count();
  const NodeId r = network.edge(rs).tail;
  const NodeId s = network.edge(rs).head;

  std::vector<std::vector<EdgeIndex>> tight_at(n);
  for (EdgeIndex e : tight) {
    tight_at[network.edge(e).tail].push_back(e);
    tight_at[network.edge(e).head].push_back(e);
  }

  // Nodes with a tight directed path into s.
  std::vector<bool> in_s(n, false);
  in_s[s] = true;
  std::vector<NodeId> stack{s};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : tight_at[v]) {
      const Edge& edge = network.edge(e);
      if (edge.head == v && !in_s[edge.tail]) {
        if (edge.tail == r) {
          throw Error(ErrorCode::PathConflict, "node " + std::to_string(r) +
                                                   " reaches " + std::to_string(s) +
                                                   " by a tight directed path");
        }
        in_s[edge.tail] = true;
        stack.push_back(edge.tail);
      }
    }
  }

  // R: the component of r in G restricted to V \ S, using every edge of G.
  // Any edge from R into S then ends on the arborescence, which is what
  // bounds the phase at i-1 steps.
  std::vector<std::vector<NodeId>> neighbours(n);
  for (const Edge& edge : network.graph().edges()) {
    neighbours[edge.tail].push_back(edge.head);
    neighbours[edge.head].push_back(edge.tail);
  }
  std::vector<bool> in_r(n, false);
  in_r[r] = true;
  stack.assign(1, r);
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : neighbours[v]) {
      if (!in_s[w] && !in_r[w]) {
        in_r[w] = true;
        stack.push_back(w);
      }
    }
  }

  // Everything else joins S.
  for (NodeId v = 0; v < n; ++v) in_s[v] = !in_r[v];

  auto partition = raise_side(in_s);
  if (!is_valid_partition(network.graph(), partition.first)) {
    throw Error(ErrorCode::InvalidPartition,
                "insertion partition " + partition.first.str() + " has a disconnected side");
  }
  return partition;
}

namespace {

void require_vertex(const Network& network, const Point& p) {
  if (p.size() != network.node_count() || !is_feasible(network, p) || !is_vertex(network, p)) {
    throw Error(ErrorCode::NotAVertex, "point " + p.str() + " is not a vertex");
  }
}

bool nondegenerate_at(const Network& network, const Point& p) {
  return tight_graph(network, p).size() + 1 == network.node_count();
}

// Shared driver: for each target-tree edge in ascending index order, take
// steps chosen by `next_step` until the edge is tight, then contract it.
// Points are lifted back to the original network as they are produced.
template <typename NextStep>
Walk build_walk(const Network& original, const Point& source, const Point& target, WalkMode mode,
                NextStep next_step) {
  require_vertex(original, source);
  require_vertex(original, target);
  const bool edge_mode = mode == WalkMode::Edge;
  if (edge_mode && (!nondegenerate_at(original, source) || !nondegenerate_at(original, target))) {
    throw Error(ErrorCode::DegenerateInstance,
                "edge walk needs nondegenerate vertices; try perturbing the costs");
  }

  const TightEdgeSet target_tight = tight_graph(original, target);
  const SpanningTree target_tree = *smallest_spanning_tree(original.graph(), target_tight);

  Network current = original;
  Point y = source;
  Point goal = target;
  std::vector<ContractionRecord> records;
  std::vector<Network> larger;  // larger[k] is the network records[k] contracts
  std::vector<std::optional<EdgeIndex>> edge_now(original.edge_count());
  for (EdgeIndex e = 0; e < original.edge_count(); ++e) edge_now[e] = e;

  std::vector<Point> points{source};
  std::vector<WalkPhase> phases;

  auto lift_all = [&](Point p) {
    for (std::size_t k = records.size(); k-- > 0;) p = lift_point(larger[k], records[k], p);
    return p;
  };

  for (EdgeIndex target_edge : target_tree.edge_indices) {
    const EdgeIndex rs = *edge_now[target_edge];
    const std::size_t nodes = current.node_count();
    const std::size_t phase_cap = edge_mode ? std::min(nodes * (nodes - 1) / 2, current.edge_count())
                                            : nodes - 1;
    WalkPhase phase{target_edge, points.size() - 1, 0};
    while (!slack(current, y, rs).is_zero()) {
      const SignedStep step = next_step(current, y, rs);
      y = move_along(y, step.circuit, step.sign, step.epsilon);
      Point lifted = lift_all(y);
      if (edge_mode && !nondegenerate_at(original, lifted)) {
        throw Error(ErrorCode::DegenerateInstance, "vertex " + lifted.str() +
                                                       " is degenerate; try perturbing the costs");
      }
      points.push_back(std::move(lifted));
      if (++phase.step_count > phase_cap) {
        throw std::logic_error("insertion phase exceeded its step bound");
      }
    }
    phases.push_back(phase);

    Contraction next = contract_edge(current, rs);
    y = project_point(next.record, y);
    goal = project_point(next.record, goal);
    for (auto& e : edge_now) {
      if (e) e = next.record.edge_map[*e];
    }
    larger.push_back(std::move(current));
    records.push_back(std::move(next.record));
    current = std::move(next.network);
  }

  if (points.back() != target) throw std::logic_error("walk builder did not reach the target");
  Walk walk = walk_from_points(original, std::move(points), mode);
  walk.phases = std::move(phases);
  return walk;
}

}  // namespace

Walk edge_walk(const Network& network, const Point& source, const Point& target) {
  return build_walk(network, source, target, WalkMode::Edge,
                    [](const Network& current, const Point& y, EdgeIndex rs) {
                      const TightEdgeSet tight = tight_graph(current, y);
                      if (tight.size() + 1 != current.node_count()) {
                        throw Error(ErrorCode::DegenerateInstance,
                                    "vertex has more than |V|-1 tight edges; try perturbing the costs");
                      }
                      const TreeSplit split = last_backward_edge(
                          current.graph(), SpanningTree{tight}, current.edge(rs).tail, current.edge(rs).head);
                      const auto [circuit, sign] = raise_side(split.in_s);
                      SignedStep step = max_step(current, y, circuit, sign);
                      if (step.entering_edges.size() != 1) {
                        throw Error(ErrorCode::DegenerateInstance,
                                    "pivot tightens several inequalities; try perturbing the costs");
                      }
                      return step;
                    });
}

Walk circuit_walk(const Network& network, const Point& source, const Point& target) {
  return build_walk(network, source, target, WalkMode::Circuit,
                    [](const Network& current, const Point& y, EdgeIndex rs) {
                      const auto [circuit, sign] = build_insertion_partition(current, y, rs);
                      return max_step(current, y, circuit, sign);
                    });
}

}  // namespace dualflow
