#include "dualflow/constructions.hpp"

#include <map>
#include <random>

#include "dualflow/error.hpp"

namespace dualflow {

Network example_graph() {
  std::vector<Edge> edges{{3, 0}, {2, 0}, {3, 1}, {0, 3}, {0, 2}, {1, 3}, {0, 1}, {1, 2}, {2, 3}};
  CostVector costs{Rational(0),    Rational(0), Rational(0), Rational(2),     Rational(4, 3),
                   Rational(4, 3), Rational(1), Rational(1), Rational(10, 9)};
  return Network(Digraph(4, std::move(edges)), std::move(costs));
}

GlueResult glue(const GlueSpec& spec) {
  if (spec.empty()) throw Error(ErrorCode::ValidationError, "glue needs at least one part");
  GlueResult result{Network(Digraph(1, {}), {}), {}};
  std::size_t next = 1;
  for (const GluePart& part : spec) {
    if (part.attach >= part.network.node_count()) {
      throw Error(ErrorCode::ValidationError, "attach node out of range");
    }
    std::vector<NodeId> map(part.network.node_count());
    for (NodeId v = 0; v < map.size(); ++v) map[v] = v == part.attach ? kAnchor : next++;
    result.node_maps.push_back(std::move(map));
  }

  std::vector<Edge> edges;
  CostVector costs;
  std::map<Edge, EdgeIndex> position;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const Network& part = spec[i].network;
    for (EdgeIndex e = 0; e < part.edge_count(); ++e) {
      const Edge mapped{result.node_maps[i][part.edge(e).tail], result.node_maps[i][part.edge(e).head]};
      auto [it, inserted] = position.try_emplace(mapped, edges.size());
      if (inserted) {
        edges.push_back(mapped);
        costs.push_back(part.cost(e));
      } else if (part.cost(e) < costs[it->second]) {
        costs[it->second] = part.cost(e);
      }
    }
  }
  result.network = Network(Digraph(next, std::move(edges)), std::move(costs));
  return result;
}

Network family_gk(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::ValidationError, "family index k must be at least 1");
  GlueSpec spec(k, GluePart{example_graph(), kAnchor});
  return glue(spec).network;
}

Network add_leaf(const Network& network, NodeId attach) {
  if (attach >= network.node_count()) throw Error(ErrorCode::ValidationError, "attach node out of range");
  std::vector<Edge> edges = network.graph().edges();
  CostVector costs = network.costs();
  edges.push_back({attach, network.node_count()});
  costs.emplace_back(0);
  return Network(Digraph(network.node_count() + 1, std::move(edges)), std::move(costs));
}

Network complete_bipartite(std::size_t m, std::size_t n, const std::vector<Rational>& costs) {
  if (m == 0 || n == 0) throw Error(ErrorCode::ValidationError, "both sides need at least one node");
  if (costs.size() != m * n) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(m * n) + " costs");
  }
  std::vector<Edge> edges;
  for (NodeId i = 0; i < m; ++i) {
    for (NodeId j = 0; j < n; ++j) edges.push_back({i, m + j});
  }
  return Network(Digraph(m + n, std::move(edges)), costs);
}

Network random_complete_bipartite(std::size_t m, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> den(1, 100);
  std::uniform_int_distribution<std::int64_t> num(1, 1000);
  std::vector<Rational> costs;
  for (std::size_t k = 0; k < m * n; ++k) {
    const std::int64_t q = den(rng);
    costs.emplace_back(num(rng), q);
  }
  return complete_bipartite(m, n, costs);
}

}  // namespace dualflow
