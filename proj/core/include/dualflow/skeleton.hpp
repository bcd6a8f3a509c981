#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dualflow/circuits.hpp"
#include "dualflow/network.hpp"
#include "dualflow/vertices.hpp"
#include "dualflow/walk.hpp"

namespace dualflow {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

struct SearchLimits {
  std::size_t max_trees = kDefaultTreeCap;
  /// Distinct points a single circuit-walk search may hold.
  std::size_t max_states = kDefaultStateCap;
  /// Circuit-walk depth limit; defaults to |V|(|V|-1)/2.
  std::optional<std::size_t> depth_cap;
  /// Worker threads for pairwise diameter computations.
  unsigned threads = 1;
};

/// |V|(|V|-1)/2, the guaranteed reach of circuit walks.
std::size_t circuit_bound(std::size_t node_count);
/// min{(|V|-1)|E|, (|V|^3-|V|)/6}, the guaranteed reach of edge walks.
std::size_t edge_bound(std::size_t node_count, std::size_t edge_count);

/// Two distinct vertices span an edge of the polyhedron iff the edges tight
/// at both leave exactly two components (isolated nodes count).
/// Throws NotAVertex or IdenticalPoints.
bool are_adjacent(const Network& network, const Point& u, const Point& v);

/// The 1-skeleton: enumerated vertices plus adjacency lists.
struct Skeleton {
  VertexSet vertices;
  std::vector<std::vector<std::size_t>> adjacent;
};

Skeleton build_skeleton(const Network& network, std::size_t max_trees = kDefaultTreeCap);

struct CircuitNeighbor {
  Point point;
  /// Every (circuit, sign) whose maximal step lands on `point`.
  std::vector<SignedStep> steps;
};

/// Destinations of all applicable maximal circuit steps from u, ordered by
/// first producing (circuit, sign) with circuits in shortlex order and Plus
/// before Minus.
std::vector<CircuitNeighbor> first_circuit_neighbors(const Network& network, const Point& u);
std::vector<CircuitNeighbor> first_circuit_neighbors(const Network& network, const CircuitTable& table,
                                                     const Point& u);

struct DistanceResult {
  std::size_t length = 0;
  Walk walk;
};

/// Shortest edge walk by breadth-first search over the skeleton.
DistanceResult combinatorial_distance(const Network& network, const Point& u, const Point& v,
                                      const SearchLimits& limits = {});
DistanceResult combinatorial_distance(const Network& network, const Skeleton& skeleton,
                                      const Point& u, const Point& v);

/// Shortest circuit walk from u to v by breadth-first search over exact
/// points. Throws DepthCapExceeded or FrontierTooLarge.
DistanceResult circuit_distance(const Network& network, const Point& u, const Point& v,
                                const SearchLimits& limits = {});

/// Circuit distances from `source` to every target (same order). Throws
/// DepthCapExceeded if some target stays unreached within the depth cap.
std::vector<DistanceResult> circuit_distances_from(const Network& network, const Point& source,
                                                   const std::vector<Point>& targets,
                                                   const SearchLimits& limits = {});

struct DiameterResult {
  std::size_t value = 0;
  Point from;
  Point to;
  Walk walk;
};

/// Edge mode maximizes over unordered vertex pairs; circuit mode over
/// ordered pairs, since circuit distance is directional.
DiameterResult diameter(const Network& network, WalkMode mode, const SearchLimits& limits = {});

}  // namespace dualflow
