#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

namespace dualflow {
namespace {

using testing::edge_of;
using testing::make_network;
using testing::pt;
using testing::tree_of;

TEST(ValidateWalk, FigureWalkBothModes) {
  const Network ex = example_graph();
  for (WalkMode mode : {WalkMode::Edge, WalkMode::Circuit}) {
    const Walk w = walk_from_points(ex, testing::ex_figure_walk(), mode);
    EXPECT_EQ(w.length(), 4u);
    EXPECT_TRUE(validate_walk(ex, w).valid());
  }
}

TEST(ValidateWalk, RejectsNonCircuitDifference) {
  const Network ex = example_graph();
  Walk w;
  w.mode = WalkMode::Circuit;
  w.points = {testing::ex_u1(), pt({0, 1, Rational(4, 3), 1})};
  EXPECT_FALSE(validate_walk(ex, w).valid());
  EXPECT_ERROR_CODE(walk_from_points(ex, w.points, WalkMode::Circuit), ErrorCode::ValidationError);
}

TEST(ValidateWalk, RejectsTruncatedStep) {
  const Network ex = example_graph();
  const SignedStep full = max_step(ex, testing::ex_u1(), PartitionCircuit({3}), Sign::Plus);
  Walk w;
  w.mode = WalkMode::Circuit;
  w.points = {testing::ex_u1(), move_along(testing::ex_u1(), full.circuit, full.sign, full.epsilon / Rational(2))};
  const WalkValidation v = validate_walk(ex, w);
  ASSERT_FALSE(v.valid());
  EXPECT_EQ(v.violation->index, 0u);
}

TEST(ValidateWalk, RejectsInfeasibleAndNonAdjacent) {
  const Network ex = example_graph();
  Walk bad;
  bad.mode = WalkMode::Circuit;
  bad.points = {testing::ex_u1(), pt({0, 0, 0, 3})};
  EXPECT_FALSE(validate_walk(ex, bad).valid());

  // A maximal circuit step whose destination is not a vertex fails edge mode.
  Walk to_y6;
  to_y6.mode = WalkMode::Edge;
  to_y6.points = {testing::ex_u1(), pt({0, 1, 1, 1})};
  EXPECT_FALSE(validate_walk(ex, to_y6).valid());
  to_y6.mode = WalkMode::Circuit;
  EXPECT_TRUE(validate_walk(ex, to_y6).valid());
}

TEST(Walk, EnteringAndLeavingEdges) {
  const Network ex = example_graph();
  const Walk w = walk_from_points(ex, testing::ex_figure_walk(), WalkMode::Edge);
  EXPECT_EQ(entering_edges(ex, w, 1), TightEdgeSet{edge_of(ex, 0, 2)});
  EXPECT_EQ(leaving_edges(ex, w, 1), TightEdgeSet{edge_of(ex, 2, 0)});
}

TEST(Contraction, ExampleEdgeV0V1) {
  const Network ex = example_graph();
  const Contraction c = contract_edge(ex, edge_of(ex, 0, 1));
  ASSERT_EQ(c.network.node_count(), 3u);
  // Contracted node ids: v0 -> 0, v2 -> 1, v3 -> 2.
  std::map<Edge, Rational> got;
  for (EdgeIndex e = 0; e < c.network.edge_count(); ++e) got[c.network.edge(e)] = c.network.cost(e);
  const std::map<Edge, Rational> expected{
      {{0, 1}, Rational(4, 3)}, {{0, 2}, Rational(2)}, {{1, 0}, Rational(0)}, {{2, 0}, Rational(-1)},
      {{1, 2}, Rational(10, 9)}};
  EXPECT_EQ(got, expected);

  EXPECT_EQ(lift_point(ex, c.record, pt({0, Rational(4, 3), 2})), pt({0, 1, Rational(4, 3), 2}));
  EXPECT_EQ(lift_point(ex, c.record, pt({0, 0, 1})), pt({0, 1, 0, 1}));
  EXPECT_EQ(project_point(c.record, pt({0, 1, Rational(4, 3), 2})), pt({0, Rational(4, 3), 2}));
  EXPECT_ERROR_CODE(project_point(c.record, testing::ex_u1()), ErrorCode::ValidationError);
  EXPECT_ERROR_CODE(lift_point(ex, c.record, pt({0, 5, 0})), ErrorCode::InfeasibleLift);
}

TEST(Contraction, SmallCases) {
  const Network two = make_network(2, {{0, 1, 1}});
  const Contraction c = contract_edge(two, 0);
  EXPECT_EQ(c.network.node_count(), 1u);
  EXPECT_EQ(c.network.edge_count(), 0u);
  EXPECT_EQ(lift_point(two, c.record, pt({0})), pt({0, 1}));

  EXPECT_ERROR_CODE(contract_edge(make_network(2, {{0, 1, 1}, {1, 0, -2}}), 0), ErrorCode::NegativeSelfLoop);
  EXPECT_ERROR_CODE(contract_edge(two, 3), ErrorCode::EdgeMissing);
  // Feasible, but the path 0 -> 2 -> 1 keeps u_1 - u_0 <= 2 < 5.
  const Network empty_face = make_network(3, {{0, 1, 5}, {0, 2, 1}, {2, 1, 1}});
  EXPECT_ERROR_CODE(contract_edge(empty_face, 0), ErrorCode::FaceEmpty);
}

TEST(Contraction, AnchorRelocation) {
  const Network ex = example_graph();
  const Contraction c = contract_edge(ex, edge_of(ex, 3, 0));
  EXPECT_TRUE(c.record.anchor_relocated);
  // The face of 3->0 contains u^(1); it lifts back from its projection.
  const Point u = testing::ex_u1();
  EXPECT_EQ(lift_point(ex, c.record, project_point(c.record, u)), u);
}

// Lifting contracted vertices gives exactly the original vertices with the
// contracted edge tight.
TEST(Contraction, FaceBijection) {
  std::mt19937_64 rng(1010);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    const Network net = testing::random_sub_tournament(rng, 2 + i % 4);
    const auto verts = testing::oracle::vertices(net);
    std::vector<EdgeIndex> candidates;
    for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
      for (const Point& v : verts) {
        if (testing::oracle::own_slack(net, v, e).is_zero()) {
          candidates.push_back(e);
          break;
        }
      }
    }
    const EdgeIndex e = candidates[rng() % candidates.size()];
    const Contraction c = contract_edge(net, e);
    std::set<Point> expected;
    for (const Point& v : verts) {
      if (testing::oracle::own_slack(net, v, e).is_zero()) expected.insert(v);
    }
    std::set<Point> lifted;
    for (const Point& w : enumerate_vertices(c.network).vertices) {
      lifted.insert(lift_point(net, c.record, w));
    }
    EXPECT_EQ(lifted, expected) << serialize_graph(net) << "edge " << e;
    ++checked;
  }
  EXPECT_EQ(checked, 80);
}

TEST(LastBackwardEdge, Examples) {
  const Network ex = example_graph();
  const SpanningTree t1 = tree_of(ex, {{3, 0}, {2, 0}, {3, 1}});
  const TreeSplit a = last_backward_edge(ex.graph(), t1, 0, 3);
  EXPECT_EQ(a.edge, edge_of(ex, 3, 0));
  EXPECT_EQ(a.in_s, (std::vector<bool>{false, true, false, true}));
  const TreeSplit b = last_backward_edge(ex.graph(), t1, 1, 3);
  EXPECT_EQ(b.edge, edge_of(ex, 3, 1));
  EXPECT_EQ(b.in_s, (std::vector<bool>{true, false, true, true}));

  const Network path = make_network(3, {{0, 1, 1}, {1, 2, 1}});
  EXPECT_ERROR_CODE(last_backward_edge(path.graph(), SpanningTree{{0, 1}}, 0, 2), ErrorCode::NoBackwardEdge);
  EXPECT_ERROR_CODE(last_backward_edge(path.graph(), SpanningTree{{0}}, 0, 2), ErrorCode::ValidationError);
}

TEST(InsertionPartition, Examples) {
  const Network ex = example_graph();
  const Point u1 = testing::ex_u1();
  // Nothing reaches v3 by a tight path, and v0, v1, v2 are joined in G.
  const auto [c, sign] = build_insertion_partition(ex, u1, edge_of(ex, 0, 3));
  EXPECT_EQ(c.s_set(), (std::vector<NodeId>{3}));
  EXPECT_EQ(sign, Sign::Plus);

  const EdgeIndex rs = edge_of(ex, 1, 3);
  const auto [c2, sign2] = build_insertion_partition(ex, u1, rs);
  EXPECT_EQ(c2.s_set(), (std::vector<NodeId>{3}));
  EXPECT_EQ(sign2, Sign::Plus);
  const SignedStep step = max_step(ex, u1, c2, sign2);
  EXPECT_LT(slack(ex, move_along(u1, step.circuit, step.sign, step.epsilon), rs), slack(ex, u1, rs));

  // Node 3 touches only the arborescence {1, 2}, so it lands in S by default.
  const Network leftover = make_network(4, {{0, 1, 1}, {2, 1, 0}, {2, 3, 1}});
  const auto [c4, sign4] = build_insertion_partition(leftover, pt({0, 0, 0, 0}), 0);
  EXPECT_EQ(c4.s_set(), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(sign4, Sign::Plus);

  // Tight path 1 -> 2 -> 3 into s = 3 absorbs all of V \ {r}.
  const Network chain = make_network(4, {{1, 2, 0}, {2, 3, 0}, {1, 0, 0}, {0, 3, 5}});
  const auto [c3, sign3] = build_insertion_partition(chain, pt({0, 0, 0, 0}), 3);
  EXPECT_EQ(c3.s_set(), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(sign3, Sign::Plus);

  EXPECT_ERROR_CODE(build_insertion_partition(ex, u1, edge_of(ex, 3, 0)), ErrorCode::ValidationError);
  // r = 0 reaches s = 3 by the tight path 0 -> 1 -> 2 -> 3.
  const Network conflict = make_network(4, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {0, 3, 1}});
  EXPECT_ERROR_CODE(build_insertion_partition(conflict, pt({0, 0, 0, 0}), 3), ErrorCode::PathConflict);
}

TEST(Builders, ExampleWalks) {
  const Network ex = example_graph();
  const Walk e = edge_walk(ex, testing::ex_u1(), testing::ex_u2());
  EXPECT_TRUE(validate_walk(ex, e).valid());
  EXPECT_GE(e.length(), 4u);
  EXPECT_LE(e.length(), 10u);
  EXPECT_EQ(e.length(), 5u);  // regression value

  const Walk c = circuit_walk(ex, testing::ex_u1(), testing::ex_u2());
  EXPECT_TRUE(validate_walk(ex, c).valid());
  EXPECT_GE(c.length(), 4u);
  EXPECT_LE(c.length(), 6u);
  EXPECT_EQ(c.length(), 4u);  // regression value
  EXPECT_EQ(c.points.back(), testing::ex_u2());

  for (const Walk& w : {edge_walk(ex, testing::ex_u1(), testing::ex_u1()),
                        circuit_walk(ex, testing::ex_u2(), testing::ex_u2())}) {
    EXPECT_EQ(w.length(), 0u);
  }
  const auto fig = testing::ex_figure_walk();
  EXPECT_EQ(edge_walk(ex, fig[0], fig[1]).length(), 1u);
}

TEST(Builders, Errors) {
  const Network ex = example_graph();
  EXPECT_ERROR_CODE(edge_walk(ex, testing::ex_u1(), pt({0, 1, 1, 1})), ErrorCode::NotAVertex);
  EXPECT_ERROR_CODE(circuit_walk(ex, pt({0, 0, 0, 3}), testing::ex_u1()), ErrorCode::NotAVertex);
  const Network degenerate = make_network(2, {{0, 1, 1}, {1, 0, -1}});
  EXPECT_ERROR_CODE(edge_walk(degenerate, pt({0, 1}), pt({0, 1})), ErrorCode::DegenerateInstance);
  EXPECT_EQ(circuit_walk(degenerate, pt({0, 1}), pt({0, 1})).length(), 0u);
}

// Phase bookkeeping: one phase per target-tree edge, step counts within the
// per-phase bounds, and each phase ends with its edge tight.
TEST(Builders, PhaseInvariants) {
  std::mt19937_64 rng(555);
  for (int i = 0; i < 40; ++i) {
    const Network net = testing::random_sub_tournament(rng, 3 + i % 4);
    const VertexSet vs = enumerate_vertices(net);
    const bool nondegenerate = degeneracy_report(net, vs).nondegenerate;
    const std::size_t n = net.node_count();
    for (const Point& s : vs.vertices) {
      const Point& t = vs.vertices.back();
      std::vector<Walk> walks{circuit_walk(net, s, t)};
      if (nondegenerate) walks.push_back(edge_walk(net, s, t));
      for (const Walk& w : walks) {
        ASSERT_EQ(w.phases.size(), n - 1);
        std::size_t total = 0;
        for (std::size_t k = 0; k < w.phases.size(); ++k) {
          const WalkPhase& ph = w.phases[k];
          EXPECT_EQ(ph.first_step, total);
          total += ph.step_count;
          const std::size_t nodes = n - k;
          if (w.mode == WalkMode::Circuit) {
            EXPECT_LE(ph.step_count, nodes - 1);
          } else {
            EXPECT_LE(ph.step_count, nodes * (nodes - 1) / 2);
          }
          EXPECT_TRUE(slack(net, w.points[total], ph.target_edge).is_zero());
        }
        EXPECT_EQ(total, w.length());
        // Once inserted, a target edge stays tight for the rest of the walk.
        for (const WalkPhase& ph : w.phases) {
          for (std::size_t p = ph.first_step + ph.step_count; p < w.points.size(); ++p) {
            EXPECT_TRUE(slack(net, w.points[p], ph.target_edge).is_zero());
          }
        }
      }
    }
  }
}

// Nodes with a tight directed path to s at u.
std::set<NodeId> tight_in_arborescence(const Network& net, const Point& u, NodeId s) {
  std::set<NodeId> reach{s};
  for (bool grew = true; grew;) {
    grew = false;
    for (EdgeIndex e : testing::oracle::tight(net, u)) {
      if (reach.count(net.edge(e).head) && reach.insert(net.edge(e).tail).second) grew = true;
    }
  }
  return reach;
}

// In the first phase (no contraction yet) every step that leaves the target
// edge slack must strictly enlarge the tight in-arborescence of s.
void expect_arborescence_growth(const Network& net, const Point& source, const Point& target) {
  const Walk w = circuit_walk(net, source, target);
  if (w.phases.empty()) return;
  const WalkPhase& ph = w.phases.front();
  const NodeId s = net.edge(ph.target_edge).head;
  for (std::size_t k = ph.first_step; k < ph.first_step + ph.step_count; ++k) {
    if (slack(net, w.points[k + 1], ph.target_edge).is_zero()) break;
    const auto before = tight_in_arborescence(net, w.points[k], s);
    const auto after = tight_in_arborescence(net, w.points[k + 1], s);
    EXPECT_TRUE(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    EXPECT_GT(after.size(), before.size()) << serialize_graph(net) << source.str() << " -> " << target.str();
  }
}

TEST(Builders, ArborescenceGrows) {
  std::mt19937_64 rng(909);
  for (int i = 0; i < 40; ++i) {
    const Network net = testing::random_sub_tournament(rng, 3 + i % 4);
    const auto verts = enumerate_vertices(net).vertices;
    for (const Point& s : verts) {
      for (const Point& t : verts) expect_arborescence_growth(net, s, t);
    }
  }
}

// A rule-4 reading through tight edges only needed 4 steps in a 4-node phase
// on this instance.
TEST(Builders, CircuitPhaseBoundRegression) {
  const Network net = parse_graph_string(
      "nodes 6\nedge 1 0 13/8\nedge 0 2 3\nedge 3 0 3/5\nedge 0 4 15/17\nedge 0 5 3\nedge 1 2 6/5\n"
      "edge 1 3 25/18\nedge 1 4 29/18\nedge 5 1 11/6\nedge 2 3 1/3\nedge 2 4 7/16\nedge 3 4 17/7\nedge 4 5 0\n");
  const Point s = pt({0, Rational(9, 5), 3, Rational(-3, 5), Rational(15, 17), Rational(-1, 30)});
  const Point t = pt({0, Rational(107, 80), Rational(-14, 15), Rational(-3, 5), Rational(-119, 240),
                      Rational(-119, 240)});
  const Walk w = circuit_walk(net, s, t);
  EXPECT_TRUE(validate_walk(net, w).valid());
  EXPECT_LE(w.length(), circuit_bound(6));
  for (std::size_t k = 0; k < w.phases.size(); ++k) EXPECT_LE(w.phases[k].step_count, 6 - k - 1);
}

}  // namespace
}  // namespace dualflow
