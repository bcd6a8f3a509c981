#include "dualflow/vertices.hpp"

#include <algorithm>

#include "dualflow/error.hpp"
#include "dualflow/polyhedron.hpp"

namespace dualflow {

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const Digraph& graph, std::vector<EdgeIndex> candidates, std::size_t max_trees,
                 const std::function<void(std::span<const EdgeIndex>)>& visit)
      : graph_(graph), candidates_(std::move(candidates)), max_trees_(max_trees), visit_(visit) {}

  void run() {
    const std::size_t n = graph_.node_count();
    if (n == 1) {
      emit();
      return;
    }
    std::vector<NodeId> label(n);
    for (NodeId v = 0; v < n; ++v) label[v] = v;
    recurse(0, label, n);
  }

 private:
  void emit() {
    if (++count_ > max_trees_) {
      throw Error(ErrorCode::InstanceTooLarge,
                  "more than " + std::to_string(max_trees_) + " spanning trees");
    }
    visit_(chosen_);
  }

  // True iff the chosen edges plus candidates[from..] still connect the graph.
  bool can_complete(std::size_t from, const std::vector<NodeId>& label) {
    DisjointSets sets(graph_.node_count());
    for (NodeId v = 0; v < graph_.node_count(); ++v) sets.unite(v, label[v]);
    for (std::size_t i = from; i < candidates_.size() && sets.components() > 1; ++i) {
      const Edge& edge = graph_.edge(candidates_[i]);
      sets.unite(edge.tail, edge.head);
    }
    return sets.components() == 1;
  }

  void recurse(std::size_t i, const std::vector<NodeId>& label, std::size_t components) {
    if (components == 1) {
      emit();
      return;
    }
    if (i == candidates_.size()) return;
    const Edge& edge = graph_.edge(candidates_[i]);
    const NodeId a = label[edge.tail];
    const NodeId b = label[edge.head];
    if (a != b) {
      std::vector<NodeId> merged(label);
      const NodeId keep = std::min(a, b);
      const NodeId drop = std::max(a, b);
      for (auto& l : merged) {
        if (l == drop) l = keep;
      }
      chosen_.push_back(candidates_[i]);
      recurse(i + 1, merged, components - 1);
      chosen_.pop_back();
    }
    if (can_complete(i + 1, label)) recurse(i + 1, label, components);
  }

  const Digraph& graph_;
  std::vector<EdgeIndex> candidates_;
  std::size_t max_trees_;
  const std::function<void(std::span<const EdgeIndex>)>& visit_;
  std::vector<EdgeIndex> chosen_;
  std::size_t count_ = 0;
};

}  // namespace

void for_each_spanning_tree(const Digraph& graph, std::size_t max_trees,
                            const std::function<void(std::span<const EdgeIndex>)>& visit,
                            std::optional<std::span<const EdgeIndex>> allowed) {
  std::vector<EdgeIndex> candidates;
  if (allowed) {
    candidates.assign(allowed->begin(), allowed->end());
    std::sort(candidates.begin(), candidates.end());
  } else {
    candidates.resize(graph.edge_count());
    for (EdgeIndex e = 0; e < graph.edge_count(); ++e) candidates[e] = e;
  }
  TreeEnumerator enumerator(graph, std::move(candidates), max_trees, visit);
  enumerator.run();
}

std::optional<SpanningTree> smallest_spanning_tree(const Digraph& graph,
                                                   std::span<const EdgeIndex> allowed) {
  std::vector<EdgeIndex> sorted(allowed.begin(), allowed.end());
  std::sort(sorted.begin(), sorted.end());
  DisjointSets sets(graph.node_count());
  SpanningTree tree;
  for (EdgeIndex e : sorted) {
    if (sets.unite(graph.edge(e).tail, graph.edge(e).head)) tree.edge_indices.push_back(e);
  }
  if (sets.components() != 1) return std::nullopt;
  return tree;
}

std::optional<std::size_t> VertexSet::index_of(const Point& p) const {
  auto it = index.find(p);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

VertexSet enumerate_vertices(const Network& network, std::size_t max_trees) {
  VertexSet result;
  for_each_spanning_tree(network.graph(), max_trees, [&](std::span<const EdgeIndex> tree) {
    auto point = tree_point_if_feasible(network, tree);
    if (!point) return;
    SpanningTree witness{EdgeSet(tree.begin(), tree.end())};
    auto [it, inserted] = result.index.try_emplace(*point, result.vertices.size());
    if (inserted) {
      result.vertices.push_back(std::move(*point));
      result.tree_witnesses.emplace_back();
    }
    result.tree_witnesses[it->second].push_back(std::move(witness));
  });
  return result;
}

DegeneracyReport degeneracy_report(const Network& network, const VertexSet& vertices) {
  DegeneracyReport report;
  for (const Point& v : vertices.vertices) {
    if (tight_graph(network, v).size() + 1 > network.node_count()) {
      report.nondegenerate = false;
      report.witnesses.push_back(v);
    }
  }
  return report;
}

DegeneracyReport degeneracy_report(const Network& network, std::size_t max_trees) {
  if (!feasibility_status(network).feasible) {
    throw Error(ErrorCode::InfeasibleInstance, "polyhedron is empty");
  }
  return degeneracy_report(network, enumerate_vertices(network, max_trees));
}

}  // namespace dualflow
