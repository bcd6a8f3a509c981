#pragma once

#include <vector>

#include "dualflow/circuits.hpp"
#include "dualflow/skeleton.hpp"

namespace dualflow::detail {

/// Breadth-first search over points reachable from `source` by maximal
/// circuit steps; one shortest walk per target, in target order.
std::vector<DistanceResult> search_circuit_walks(const Network& network, const CircuitTable& table,
                                                 const SearchLimits& limits, const Point& source,
                                                 const std::vector<Point>& targets);

}  // namespace dualflow::detail
