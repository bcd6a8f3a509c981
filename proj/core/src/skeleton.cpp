#include "dualflow/skeleton.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <future>
#include <unordered_map>

#include "dualflow/error.hpp"
#include "circuit_search.hpp"
#include "dualflow/polyhedron.hpp"

namespace dualflow {

std::size_t circuit_bound(std::size_t node_count) { return node_count * (node_count - 1) / 2; }

std::size_t edge_bound(std::size_t node_count, std::size_t edge_count) {
  const std::size_t n = node_count;
  return std::min((n - 1) * edge_count, (n * n * n - n) / 6);
}

namespace {

void require_vertex(const Network& network, const Point& p) {
  if (p.size() != network.node_count() || !is_feasible(network, p) || !is_vertex(network, p)) {
    throw Error(ErrorCode::NotAVertex, "point " + p.str() + " is not a vertex");
  }
}

// Adjacency criterion on precomputed tight sets.
bool shares_edge(const Digraph& graph, const TightEdgeSet& a, const TightEdgeSet& b) {
  TightEdgeSet common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return count_components(graph, common) == 2;
}

}  // namespace

bool are_adjacent(const Network& network, const Point& u, const Point& v) {
  require_vertex(network, u);
  require_vertex(network, v);
  if (u == v) throw Error(ErrorCode::IdenticalPoints, "adjacency needs two distinct vertices");
  return shares_edge(network.graph(), tight_graph(network, u), tight_graph(network, v));
}

Skeleton build_skeleton(const Network& network, std::size_t max_trees) {
  Skeleton skeleton{enumerate_vertices(network, max_trees), {}};
  const auto& vertices = skeleton.vertices.vertices;
  std::vector<TightEdgeSet> tight;
  tight.reserve(vertices.size());
  for (const Point& v : vertices) tight.push_back(tight_graph(network, v));
  skeleton.adjacent.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (shares_edge(network.graph(), tight[i], tight[j])) {
        skeleton.adjacent[i].push_back(j);
        skeleton.adjacent[j].push_back(i);
      }
    }
  }
  return skeleton;
}

std::vector<CircuitNeighbor> first_circuit_neighbors(const Network& network, const CircuitTable& table,
                                                     const Point& u) {
  if (!is_feasible(network, u)) throw Error(ErrorCode::InfeasiblePoint, "point " + u.str() + " is infeasible");
  std::vector<CircuitNeighbor> result;
  std::unordered_map<Point, std::size_t> seen;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      auto step = table.try_step(network, u, i, sign);
      if (!step) continue;
      Point dest = move_along(u, step->circuit, sign, step->epsilon);
      auto [it, inserted] = seen.try_emplace(dest, result.size());
      if (inserted) result.push_back({std::move(dest), {}});
      result[it->second].steps.push_back(std::move(*step));
    }
  }
  return result;
}

std::vector<CircuitNeighbor> first_circuit_neighbors(const Network& network, const Point& u) {
  return first_circuit_neighbors(network, CircuitTable(network.graph()), u);
}

namespace {

Walk walk_along(const Network& network, std::vector<Point> points, WalkMode mode) {
  return walk_from_points(network, std::move(points), mode);
}

std::vector<std::size_t> skeleton_bfs(const Skeleton& skeleton, std::size_t source,
                                      std::vector<std::size_t>* parent) {
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(skeleton.adjacent.size(), kUnseen);
  if (parent) parent->assign(skeleton.adjacent.size(), kUnseen);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : skeleton.adjacent[v]) {
      if (dist[w] != kUnseen) continue;
      dist[w] = dist[v] + 1;
      if (parent) (*parent)[w] = v;
      queue.push_back(w);
    }
  }
  return dist;
}

std::size_t vertex_index(const Skeleton& skeleton, const Point& p) {
  auto i = skeleton.vertices.index_of(p);
  if (!i) throw Error(ErrorCode::NotAVertex, "point " + p.str() + " is not a vertex");
  return *i;
}

void require_point(const Network& network, const Point& p) {
  if (p.size() != network.node_count() || !is_feasible(network, p) || !is_vertex(network, p)) {
    throw Error(ErrorCode::NotAVertex, "point " + p.str() + " is not a vertex");
  }
}

// Runs `work(i)` for i in [0, count) on up to `threads` workers.
template <typename Work>
void parallel_for(std::size_t count, unsigned threads, Work&& work) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> workers;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t) {
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    }));
  }
  for (auto& w : workers) w.get();
}

}  // namespace

DistanceResult combinatorial_distance(const Network& network, const Skeleton& skeleton, const Point& u,
                                      const Point& v) {
  require_vertex(network, u);
  require_vertex(network, v);
  const std::size_t source = vertex_index(skeleton, u);
  const std::size_t target = vertex_index(skeleton, v);
  std::vector<std::size_t> parent;
  const auto dist = skeleton_bfs(skeleton, source, &parent);
  std::vector<Point> points;
  for (std::size_t x = target; x != source; x = parent[x]) points.push_back(skeleton.vertices.vertices[x]);
  points.push_back(skeleton.vertices.vertices[source]);
  std::reverse(points.begin(), points.end());
  return DistanceResult{dist[target], walk_along(network, std::move(points), WalkMode::Edge)};
}

DistanceResult combinatorial_distance(const Network& network, const Point& u, const Point& v,
                                      const SearchLimits& limits) {
  require_vertex(network, u);
  require_vertex(network, v);
  return combinatorial_distance(network, build_skeleton(network, limits.max_trees), u, v);
}

std::vector<DistanceResult> circuit_distances_from(const Network& network, const Point& source,
                                                   const std::vector<Point>& targets,
                                                   const SearchLimits& limits) {
  require_point(network, source);
  for (const Point& t : targets) require_point(network, t);
  const CircuitTable table(network.graph());
  return detail::search_circuit_walks(network, table, limits, source, targets);
}

DistanceResult circuit_distance(const Network& network, const Point& u, const Point& v,
                                const SearchLimits& limits) {
  return std::move(circuit_distances_from(network, u, {v}, limits).front());
}

DiameterResult diameter(const Network& network, WalkMode mode, const SearchLimits& limits) {
  const Skeleton skeleton = build_skeleton(network, limits.max_trees);
  const auto& vertices = skeleton.vertices.vertices;
  if (vertices.empty()) throw Error(ErrorCode::InfeasibleInstance, "polyhedron has no vertices");

  DiameterResult best{0, vertices.front(), vertices.front(), Walk{mode, {vertices.front()}, {}, {}}};
  if (mode == WalkMode::Edge) {
    std::size_t from = 0;
    std::size_t to = 0;
    for (std::size_t s = 0; s < vertices.size(); ++s) {
      const auto dist = skeleton_bfs(skeleton, s, nullptr);
      for (std::size_t t = s + 1; t < vertices.size(); ++t) {
        if (dist[t] > best.value) {
          best.value = dist[t];
          from = s;
          to = t;
        }
      }
    }
    auto witness = combinatorial_distance(network, skeleton, vertices[from], vertices[to]);
    best.from = vertices[from];
    best.to = vertices[to];
    best.walk = std::move(witness.walk);
    return best;
  }

  const CircuitTable table(network.graph());
  // Farthest target per source, first one on ties.
  std::vector<std::optional<DistanceResult>> farthest(vertices.size());
  parallel_for(vertices.size(), limits.threads, [&](std::size_t s) {
    auto results = detail::search_circuit_walks(network, table, limits, vertices[s], vertices);
    std::size_t arg = 0;
    for (std::size_t t = 1; t < results.size(); ++t) {
      if (results[t].length > results[arg].length) arg = t;
    }
    farthest[s] = std::move(results[arg]);
  });
  std::size_t arg = 0;
  for (std::size_t s = 1; s < farthest.size(); ++s) {
    if (farthest[s]->length > farthest[arg]->length) arg = s;
  }
  best.value = farthest[arg]->length;
  best.walk = std::move(farthest[arg]->walk);
  best.from = best.walk.points.front();
  best.to = best.walk.points.back();
  return best;
}

}  // namespace dualflow
