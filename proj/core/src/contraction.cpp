#include "dualflow/contraction.hpp"

#include <map>

#include "dualflow/error.hpp"
#include "dualflow/polyhedron.hpp"

namespace dualflow {

Contraction contract_edge(const Network& network, EdgeIndex ab) {
  if (ab >= network.edge_count()) {
    throw Error(ErrorCode::EdgeMissing, "edge index " + std::to_string(ab) + " does not exist");
  }
  const std::size_t n = network.node_count();
  const NodeId a = network.edge(ab).tail;
  const NodeId b = network.edge(ab).head;
  const Rational& c_ab = network.cost(ab);

  ContractionRecord record;
  record.kept_node = a;
  record.removed_node = b;
  record.edge_cost = c_ab;
  record.offset = c_ab;
  record.anchor_relocated = (b == kAnchor);
  record.node_map.assign(n, 0);
  NodeId next = 0;
  if (record.anchor_relocated) record.node_map[a] = next++;
  for (NodeId v = 0; v < n; ++v) {
    if (v == b || (record.anchor_relocated && v == a)) continue;
    record.node_map[v] = next++;
  }
  record.node_map[b] = record.node_map[a];

  std::vector<Edge> edges;
  CostVector costs;
  std::map<Edge, EdgeIndex> position;
  record.edge_map.assign(network.edge_count(), std::nullopt);
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    const Edge mapped{record.node_map[edge.tail], record.node_map[edge.head]};
    if (mapped.tail == mapped.head) {
      if (e != ab && network.cost(e) + c_ab < 0) {
        throw Error(ErrorCode::NegativeSelfLoop,
                    "contracting " + std::to_string(a) + "->" + std::to_string(b) +
                        " leaves a negative self-loop: the face is empty");
      }
      continue;
    }
    Rational cost = network.cost(e);
    if (edge.tail == b) cost += c_ab;
    if (edge.head == b) cost -= c_ab;
    auto [it, inserted] = position.try_emplace(mapped, edges.size());
    if (inserted) {
      edges.push_back(mapped);
      costs.push_back(std::move(cost));
    } else if (cost < costs[it->second]) {
      costs[it->second] = std::move(cost);
    }
    record.edge_map[e] = it->second;
  }

  Network contracted(Digraph(n - 1, std::move(edges)), std::move(costs));
  if (!feasibility_status(contracted).feasible) {
    throw Error(ErrorCode::FaceEmpty, "no feasible point has edge " + std::to_string(a) + "->" +
                                          std::to_string(b) + " tight");
  }
  return Contraction{std::move(contracted), std::move(record)};
}

Point lift_point(const Network& larger, const ContractionRecord& record, const Point& contracted) {
  const std::size_t n = record.node_map.size();
  if (contracted.size() + 1 != n) {
    throw Error(ErrorCode::DimensionMismatch, "contracted point has the wrong dimension");
  }
  std::vector<Rational> coords(n);
  for (NodeId v = 0; v < n; ++v) coords[v] = contracted[record.node_map[v]];
  coords[record.removed_node] += record.offset;
  if (record.anchor_relocated) {
    const Rational shift = coords[kAnchor];
    for (auto& c : coords) c -= shift;
  }
  Point lifted(std::move(coords));
  if (!is_feasible(larger, lifted)) {
    throw Error(ErrorCode::InfeasibleLift, "lifted point " + lifted.str() + " is infeasible");
  }
  return lifted;
}

Point project_point(const ContractionRecord& record, const Point& u) {
  const std::size_t n = record.node_map.size();
  if (u.size() != n) throw Error(ErrorCode::DimensionMismatch, "point has the wrong dimension");
  if (u[record.removed_node] - u[record.kept_node] != record.offset) {
    throw Error(ErrorCode::ValidationError, "contracted edge is not tight at " + u.str());
  }
  const Rational shift = u[record.kept_node];
  std::vector<Rational> coords(n - 1);
  for (NodeId v = 0; v < n; ++v) {
    if (v == record.removed_node) continue;
    coords[record.node_map[v]] = record.anchor_relocated ? u[v] - shift : u[v];
  }
  return Point(std::move(coords));
}

}  // namespace dualflow
