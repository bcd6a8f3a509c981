#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualflow/circuits.hpp"
#include "dualflow/network.hpp"

namespace dualflow {

enum class WalkMode { Edge, Circuit };

std::string_view to_string(WalkMode mode);

/// Steps of a builder walk spent inserting one target-tree edge. The edge
/// index refers to the original (uncontracted) network.
struct WalkPhase {
  EdgeIndex target_edge;
  std::size_t first_step;
  std::size_t step_count;
};

struct Walk {
  WalkMode mode = WalkMode::Circuit;
  std::vector<Point> points;
  std::vector<SignedStep> steps;
  std::vector<WalkPhase> phases;

  std::size_t length() const { return points.empty() ? 0 : points.size() - 1; }
};

/// Builds a walk from a point sequence, deriving each step from the
/// difference of consecutive points. Throws ValidationError when some
/// difference is not a maximal circuit step.
Walk walk_from_points(const Network& network, std::vector<Point> points, WalkMode mode);

/// Edges tight after step i but not before it, and the reverse.
TightEdgeSet entering_edges(const Network& network, const Walk& walk, std::size_t step);
TightEdgeSet leaving_edges(const Network& network, const Walk& walk, std::size_t step);

struct WalkViolation {
  /// Index of the offending point (or of the first point of the offending step).
  std::size_t index;
  std::string reason;
};

struct WalkValidation {
  std::optional<WalkViolation> violation;

  bool valid() const { return !violation; }
  explicit operator bool() const { return valid(); }
};

/// Checks every point is feasible, every difference is a positive multiple of
/// a valid circuit vector, and every step is maximal. In edge mode it also
/// requires every point to be a vertex and consecutive points to be adjacent.
/// Never throws for malformed walks; the first violation is reported.
WalkValidation validate_walk(const Network& network, const Walk& walk);

}  // namespace dualflow
