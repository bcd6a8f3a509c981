#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dualflow/network.hpp"

namespace dualflow {

inline constexpr std::size_t kDefaultTreeCap = 1'000'000;

/// Visits every spanning tree of the graph whose edges all lie in `allowed`
/// (all edges when empty), in lexicographic order of the sorted edge-index
/// lists. Throws InstanceTooLarge once more than `max_trees` trees are seen.
void for_each_spanning_tree(const Digraph& graph, std::size_t max_trees,
                            const std::function<void(std::span<const EdgeIndex>)>& visit,
                            std::optional<std::span<const EdgeIndex>> allowed = std::nullopt);

/// Lexicographically smallest spanning tree using only `allowed` edges
/// (Kruskal in ascending index order), or nullopt if they do not span.
std::optional<SpanningTree> smallest_spanning_tree(const Digraph& graph,
                                                   std::span<const EdgeIndex> allowed);

/// Vertices of the polyhedron, each with every feasible spanning tree that
/// determines it.
struct VertexSet {
  std::vector<Point> vertices;
  std::vector<std::vector<SpanningTree>> tree_witnesses;

  std::size_t size() const { return vertices.size(); }
  std::optional<std::size_t> index_of(const Point& p) const;

  std::unordered_map<Point, std::size_t> index;
};

/// Enumerates spanning trees, keeps the feasible tree points and
/// deduplicates them exactly. Order follows the first witness tree.
VertexSet enumerate_vertices(const Network& network, std::size_t max_trees = kDefaultTreeCap);

struct DegeneracyReport {
  bool nondegenerate = true;
  /// Vertices whose tight graph has more than |V|-1 edges.
  std::vector<Point> witnesses;
};

/// Requires a feasible instance; throws InfeasibleInstance otherwise.
DegeneracyReport degeneracy_report(const Network& network, std::size_t max_trees = kDefaultTreeCap);
DegeneracyReport degeneracy_report(const Network& network, const VertexSet& vertices);

}  // namespace dualflow
