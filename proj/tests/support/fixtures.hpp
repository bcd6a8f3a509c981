#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <initializer_list>
#include <tuple>
#include <vector>

#include "dualflow/dualflow.hpp"

namespace dualflow {

inline void PrintTo(ErrorCode code, std::ostream* os) { *os << to_string(code); }

}  // namespace dualflow

namespace dualflow::testing {

inline Point pt(std::initializer_list<Rational> coords) { return Point(std::vector<Rational>(coords)); }

/// Network from (tail, head, cost) triples.
inline Network make_network(std::size_t nodes, std::initializer_list<std::tuple<NodeId, NodeId, Rational>> edges) {
  std::vector<Edge> list;
  CostVector costs;
  for (const auto& [t, h, c] : edges) {
    list.push_back({t, h});
    costs.push_back(c);
  }
  return Network(Digraph(nodes, std::move(list)), std::move(costs));
}

inline EdgeIndex edge_of(const Network& net, NodeId tail, NodeId head) {
  auto e = net.graph().find_edge(tail, head);
  if (!e) throw std::logic_error("fixture edge missing");
  return *e;
}

inline SpanningTree tree_of(const Network& net, std::initializer_list<Edge> edges) {
  SpanningTree t;
  for (const Edge& e : edges) t.edge_indices.push_back(edge_of(net, e.tail, e.head));
  std::sort(t.edge_indices.begin(), t.edge_indices.end());
  return t;
}

// The two distinguished vertices of the 4-node example and the walk between
// them drawn in its length-4 figure.
inline Point ex_u1() { return pt({0, 0, 0, 0}); }
inline Point ex_u2() { return pt({0, Rational(2, 3), Rational(4, 3), 2}); }
inline std::vector<Point> ex_figure_walk() {
  return {ex_u1(), pt({0, 1, 0, 1}), pt({0, 1, Rational(4, 3), 1}), pt({0, 1, Rational(4, 3), 2}), ex_u2()};
}

inline Network single_node() { return Network(Digraph(1, {}), {}); }

}  // namespace dualflow::testing

#define EXPECT_ERROR_CODE(statement, expected)                                   \
  do {                                                                           \
    try {                                                                        \
      statement;                                                                 \
      ADD_FAILURE() << "expected " << ::dualflow::to_string(expected);           \
    } catch (const ::dualflow::Error& error_) {                                  \
      EXPECT_EQ(error_.code(), expected) << error_.what();                       \
    }                                                                            \
  } while (0)
