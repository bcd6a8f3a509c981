#pragma once

#include <cstdint>
#include <vector>

#include "dualflow/network.hpp"

namespace dualflow {

/// The 4-node, 9-edge instance whose circuit diameter is at least 4. Edge
/// order: 3->0 (0), 2->0 (0), 3->1 (0), 0->3 (2), 0->2 (4/3), 1->3 (4/3),
/// 0->1 (1), 1->2 (1), 2->3 (10/9).
Network example_graph();

struct GluePart {
  Network network;
  NodeId attach = kAnchor;
};

using GlueSpec = std::vector<GluePart>;

struct GlueResult {
  Network network;
  /// node_maps[i][v] is the glued node of node v of part i; attach nodes map to 0.
  std::vector<std::vector<NodeId>> node_maps;
};

/// Fuses the attach nodes of all parts into the new anchor 0. Costs carry
/// over unchanged; parallel edges, if any arise, keep the minimum cost.
GlueResult glue(const GlueSpec& spec);

/// k copies of example_graph() glued at their anchors: 3k+1 nodes, 9k edges.
Network family_gk(std::size_t k);

/// Adds node |V| and the edge attach -> new node with cost 0.
Network add_leaf(const Network& network, NodeId attach);

/// Nodes 0..M-1 on the left (anchor among them), M..M+N-1 on the right, and
/// edge i -> M+j with cost costs[i*N + j].
Network complete_bipartite(std::size_t m, std::size_t n, const std::vector<Rational>& costs);

/// complete_bipartite with seeded random positive costs p/q, q <= 100.
Network random_complete_bipartite(std::size_t m, std::size_t n, std::uint64_t seed);

}  // namespace dualflow
