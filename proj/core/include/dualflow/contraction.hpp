#pragma once

#include <optional>
#include <vector>

#include "dualflow/network.hpp"

namespace dualflow {

/// How one edge contraction a->b relates the smaller network to the larger.
/// The merged variable is identified with u_a, so u_b = u_a + cost(ab).
struct ContractionRecord {
  NodeId kept_node;     // a, in the larger network
  NodeId removed_node;  // b, in the larger network
  Rational edge_cost;
  /// Larger-network node -> smaller-network node; b maps to a's image.
  std::vector<NodeId> node_map;
  /// u_b - u_a on the face.
  Rational offset;
  /// True when b was the anchor; a's image becomes the new anchor.
  bool anchor_relocated = false;
  /// Larger-network edge -> smaller-network edge; nullopt for ab and ba.
  std::vector<std::optional<EdgeIndex>> edge_map;
};

struct Contraction {
  Network network;
  ContractionRecord record;
};

/// Contracts the tight-able edge `ab`: out-edges of the merged node cost
/// min{c_aj, c_bj + c_ab}, in-edges cost min{c_ia, c_ib - c_ab}, parallel
/// edges keep the minimum and an antiparallel ba edge is dropped.
/// Throws EdgeMissing, NegativeSelfLoop (c_ab + c_ba < 0) or FaceEmpty.
Contraction contract_edge(const Network& network, EdgeIndex ab);

/// Point of the larger network with ab tight that corresponds to a point of
/// the contracted one. Throws InfeasibleLift if the result violates `larger`.
Point lift_point(const Network& larger, const ContractionRecord& record, const Point& contracted);

/// Inverse of lift_point for points with ab tight. Throws ValidationError
/// if ab is not tight at u.
Point project_point(const ContractionRecord& record, const Point& u);

}  // namespace dualflow
