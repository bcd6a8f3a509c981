#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dualflow/network.hpp"

namespace dualflow {

/// True iff every edge inequality -u_tail + u_head <= cost holds exactly.
/// Throws DimensionMismatch when the point has the wrong length.
bool is_feasible(const Network& network, const Point& u);

/// Slack cost - (-u_tail + u_head) of one edge; negative when violated.
Rational slack(const Network& network, const Point& u, EdgeIndex e);

struct FeasibilityStatus {
  bool feasible = false;
  /// Feasible point with anchor 0 (only when feasible).
  std::optional<Point> witness;
  /// Edge indices of a directed cycle with negative total cost (only when infeasible).
  std::vector<EdgeIndex> negative_cycle;
};

/// Bellman-Ford over the difference constraints u_head <= u_tail + cost.
FeasibilityStatus feasibility_status(const Network& network);

/// Edges whose inequality is tight at u. Throws InfeasiblePoint if u is infeasible.
TightEdgeSet tight_graph(const Network& network, const Point& u);

/// Unique point with anchor 0 making every tree edge tight. Throws
/// ValidationError if the edges do not form a spanning tree and
/// InfeasibleTree if the point violates a non-tree inequality.
Point vertex_from_tree(const Network& network, const SpanningTree& tree);

/// Same as vertex_from_tree but returns nullopt for infeasible trees and skips
/// the spanning-tree validation.
std::optional<Point> tree_point_if_feasible(const Network& network, std::span<const EdgeIndex> tree);

/// u is a vertex iff its tight graph touches every node and is connected.
bool is_vertex(const Network& network, const Point& u);

/// Copy of the network with k/10^9 (k uniform in [1, 999]) added to every
/// cost. Used to break ties in degenerate instances.
Network perturb_costs(const Network& network, std::uint64_t seed);

}  // namespace dualflow
