#include "dualflow/walk.hpp"

#include <algorithm>
#include <iterator>

#include "dualflow/error.hpp"
#include "dualflow/polyhedron.hpp"
#include "dualflow/skeleton.hpp"

namespace dualflow {

std::string_view to_string(WalkMode mode) { return mode == WalkMode::Edge ? "edge" : "circuit"; }

namespace {

// Derives the maximal step from a to b, or explains why there is none.
std::optional<SignedStep> derive_step(const Network& network, const Point& a, const Point& b,
                                      std::string& why) {
  auto d = displacement(a, b);
  if (!d) {
    why = "difference is not a multiple of a 0/1 circuit vector";
    return std::nullopt;
  }
  if (!is_valid_partition(network.graph(), d->circuit)) {
    why = "support " + d->circuit.str() + " is not a connected bipartition";
    return std::nullopt;
  }
  std::optional<SignedStep> step;
  try {
    step = max_step(network, a, d->circuit, d->sign);
  } catch (const Error& e) {
    why = e.what();
    return std::nullopt;
  }
  if (step->epsilon != d->amount) {
    why = "step length " + d->amount.str() + " is not maximal (" + step->epsilon.str() + ")";
    return std::nullopt;
  }
  return step;
}

}  // namespace

Walk walk_from_points(const Network& network, std::vector<Point> points, WalkMode mode) {
  Walk walk;
  walk.mode = mode;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    std::string why;
    auto step = derive_step(network, points[i], points[i + 1], why);
    if (!step) throw Error(ErrorCode::ValidationError, "step " + std::to_string(i) + ": " + why);
    walk.steps.push_back(std::move(*step));
  }
  walk.points = std::move(points);
  return walk;
}

TightEdgeSet entering_edges(const Network& network, const Walk& walk, std::size_t step) {
  const auto before = tight_graph(network, walk.points.at(step));
  const auto after = tight_graph(network, walk.points.at(step + 1));
  TightEdgeSet out;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(out));
  return out;
}

TightEdgeSet leaving_edges(const Network& network, const Walk& walk, std::size_t step) {
  const auto before = tight_graph(network, walk.points.at(step));
  const auto after = tight_graph(network, walk.points.at(step + 1));
  TightEdgeSet out;
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(out));
  return out;
}

WalkValidation validate_walk(const Network& network, const Walk& walk) {
  auto fail = [](std::size_t index, std::string reason) {
    return WalkValidation{WalkViolation{index, std::move(reason)}};
  };
  if (walk.points.empty()) return fail(0, "walk has no points");
  if (!walk.steps.empty() && walk.steps.size() + 1 != walk.points.size()) {
    return fail(0, "step count does not match point count");
  }

  for (std::size_t i = 0; i < walk.points.size(); ++i) {
    const Point& p = walk.points[i];
    if (p.size() != network.node_count()) return fail(i, "point has wrong dimension");
    if (!is_feasible(network, p)) return fail(i, "point " + p.str() + " is infeasible");
    if (walk.mode == WalkMode::Edge && !is_vertex(network, p)) {
      return fail(i, "point " + p.str() + " is not a vertex");
    }
  }

  for (std::size_t i = 0; i + 1 < walk.points.size(); ++i) {
    const Point& a = walk.points[i];
    const Point& b = walk.points[i + 1];
    std::string why;
    auto step = derive_step(network, a, b, why);
    if (!step) return fail(i, why);
    if (!walk.steps.empty()) {
      const SignedStep& recorded = walk.steps[i];
      if (recorded.circuit != step->circuit || recorded.sign != step->sign ||
          recorded.epsilon != step->epsilon || recorded.entering_edges != step->entering_edges) {
        return fail(i, "recorded step does not match the point difference");
      }
    }
    if (walk.mode == WalkMode::Edge && !are_adjacent(network, a, b)) {
      return fail(i, "points " + a.str() + " and " + b.str() + " are not adjacent");
    }
  }
  return {};
}

}  // namespace dualflow
