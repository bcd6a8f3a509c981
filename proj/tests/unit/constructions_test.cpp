#include <gtest/gtest.h>

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

TEST(ExampleGraph, Shape) {
  const Network ex = example_graph();
  EXPECT_EQ(ex.cost(edge_of(ex, 2, 3)), Rational(10, 9));
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (const Edge& e : ex.graph().edges()) pairs.insert(std::minmax(e.tail, e.head));
  EXPECT_EQ(pairs.size(), 6u);
  EXPECT_TRUE(degeneracy_report(ex).nondegenerate);
}

TEST(Glue, TwoExampleCopies) {
  const GlueResult g = glue({{example_graph(), 0}, {example_graph(), 0}});
  EXPECT_EQ(g.network.node_count(), 7u);
  EXPECT_EQ(g.network.edge_count(), 18u);
  EXPECT_EQ(g.node_maps[1], (std::vector<NodeId>{0, 4, 5, 6}));
}

TEST(Glue, SinglePartIsIdentity) {
  const Network ex = example_graph();
  const GlueResult g = glue({{ex, 0}});
  EXPECT_EQ(g.network.graph().edges(), ex.graph().edges());
  EXPECT_EQ(g.network.costs(), ex.costs());
}

TEST(Glue, AttachNodeBecomesAnchor) {
  const Network path = make_network(3, {{0, 1, 1}, {1, 2, 2}});
  const GlueResult g = glue({{path, 2}});
  EXPECT_EQ(g.node_maps[0], (std::vector<NodeId>{1, 2, 0}));
  EXPECT_EQ(g.network.edge(1), (Edge{2, 0}));
  EXPECT_ERROR_CODE(glue({{path, 3}}), ErrorCode::ValidationError);
  EXPECT_ERROR_CODE(glue({}), ErrorCode::ValidationError);
}

// Every valid partition of a glued graph keeps S inside a single part.
TEST(Glue, PartitionsStayInsideOnePart) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    GlueSpec spec{{testing::random_sub_tournament(rng, 3), 0}, {testing::random_sub_tournament(rng, 3), 0},
                  {example_graph(), 0}};
    const GlueResult g = glue(spec);
    std::vector<std::size_t> part_of(g.network.node_count(), 0);
    for (std::size_t p = 0; p < g.node_maps.size(); ++p) {
      for (NodeId v : g.node_maps[p]) {
        if (v != kAnchor) part_of[v] = p;
      }
    }
    for (const PartitionCircuit& c : enumerate_partitions(g.network.graph())) {
      for (NodeId v : c.s_set()) EXPECT_EQ(part_of[v], part_of[c.s_set().front()]) << c.str();
    }
  }
}

// Diameters add up under gluing, in both modes.
TEST(Glue, DiametersAdd) {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 15; ++i) {
    const Network a = testing::random_sub_tournament(rng, 2 + i % 2);
    const Network b = testing::random_sub_tournament(rng, 3);
    const Network g = glue({{a, 0}, {b, 0}}).network;
    for (WalkMode mode : {WalkMode::Edge, WalkMode::Circuit}) {
      EXPECT_EQ(diameter(g, mode).value, diameter(a, mode).value + diameter(b, mode).value)
          << to_string(mode) << "\n" << serialize_graph(a) << serialize_graph(b);
    }
  }
}

TEST(FamilyGk, Shapes) {
  const Network g1 = family_gk(1);
  EXPECT_EQ(g1.graph().edges(), example_graph().graph().edges());
  EXPECT_EQ(g1.costs(), example_graph().costs());
  EXPECT_EQ(family_gk(2).node_count(), 7u);
  const Network g3 = family_gk(3);
  EXPECT_EQ(g3.node_count(), 10u);
  EXPECT_EQ(g3.edge_count(), 27u);
  EXPECT_ERROR_CODE(family_gk(0), ErrorCode::ValidationError);
}

TEST(FamilyGk, EdgeDiameterOfTwoCopies) {
  EXPECT_EQ(diameter(family_gk(2), WalkMode::Edge).value, 8u);
}

TEST(AddLeaf, KeepsDiameterAndTracksAttachNode) {
  const Network one = add_leaf(example_graph(), 0);
  const Network two = add_leaf(one, 0);
  EXPECT_EQ(one.node_count(), 5u);
  EXPECT_EQ(two.node_count(), 6u);
  EXPECT_GE(diameter(one, WalkMode::Circuit).value, 4u);
  EXPECT_GE(diameter(two, WalkMode::Circuit).value, 4u);

  const Network side = add_leaf(example_graph(), 2);
  for (const Point& v : enumerate_vertices(side).vertices) EXPECT_EQ(v[4], v[2]);
  EXPECT_ERROR_CODE(add_leaf(example_graph(), 9), ErrorCode::ValidationError);
}

TEST(Bipartite, SmallCases) {
  const Network k22 = complete_bipartite(2, 2, {Rational(3), Rational(5), Rational(7), Rational(2)});
  EXPECT_TRUE(degeneracy_report(k22).nondegenerate);
  EXPECT_LE(diameter(k22, WalkMode::Edge).value, 1u);
  EXPECT_LE(diameter(k22, WalkMode::Circuit).value, 2u);

  const VertexSet single = enumerate_vertices(complete_bipartite(1, 1, {Rational(5)}));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.vertices.front(), pt({0, 5}));

  EXPECT_ERROR_CODE(complete_bipartite(2, 2, {Rational(1)}), ErrorCode::DimensionMismatch);
  EXPECT_ERROR_CODE(complete_bipartite(0, 2, {}), ErrorCode::ValidationError);
}

TEST(Bipartite, SeededGeneratorIsDeterministic) {
  const Network a = random_complete_bipartite(3, 2, 9);
  const Network b = random_complete_bipartite(3, 2, 9);
  EXPECT_EQ(a.costs(), b.costs());
  EXPECT_EQ(a.edge_count(), 6u);
  for (const Rational& c : a.costs()) EXPECT_GT(c, Rational(0));
}

}  // namespace
}  // namespace dualflow
