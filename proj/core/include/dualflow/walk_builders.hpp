#pragma once

#include <utility>
#include <vector>

#include "dualflow/circuits.hpp"
#include "dualflow/network.hpp"
#include "dualflow/walk.hpp"

namespace dualflow {

struct TreeSplit {
  EdgeIndex edge;
  /// Membership mask of the component of T - edge that contains s.
  std::vector<bool> in_s;
};

/// On the tree path from r to s, the backward edge (tail nearer s) closest
/// to s, with the two components of T minus that edge. Throws
/// NoBackwardEdge when every path edge points toward s, i.e. T contains a
/// directed r->s path.
TreeSplit last_backward_edge(const Digraph& graph, const SpanningTree& tree, NodeId r, NodeId s);

/// Pivot walk between two vertices of a nondegenerate polyhedron: inserts the
/// target tree edges one at a time (ascending index), contracting each once
/// tight. Throws NotAVertex, or DegenerateInstance when a visited vertex has
/// more than |V|-1 tight edges or a pivot tightens several inequalities.
Walk edge_walk(const Network& network, const Point& source, const Point& target);

/// Circuit that raises s relative to r at y. S starts as the tight
/// in-arborescence of s; R is the component of r in G minus that set; every
/// remaining node joins S. Throws PathConflict if r has a tight directed path to s, and
/// InvalidPartition if a side is disconnected in the graph.
std::pair<PartitionCircuit, Sign> build_insertion_partition(const Network& network, const Point& y,
                                                            EdgeIndex rs);

/// Circuit walk between two vertices using insertion partitions; degenerate
/// polyhedra are allowed. Length is at most |V|(|V|-1)/2.
Walk circuit_walk(const Network& network, const Point& source, const Point& target);

}  // namespace dualflow
