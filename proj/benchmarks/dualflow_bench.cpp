#include <benchmark/benchmark.h>

#include <random>

#include "dualflow/dualflow.hpp"

namespace {

using namespace dualflow;

const Point kU1(std::vector<Rational>{0, 0, 0, 0});
const Point kU2(std::vector<Rational>{0, Rational(2, 3), Rational(4, 3), 2});

void BM_EnumerateVerticesGk(benchmark::State& state) {
  const Network net = family_gk(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(net));
}
BENCHMARK(BM_EnumerateVerticesGk)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_EnumeratePartitionsBipartite(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Network net = random_complete_bipartite(m, m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(net.graph()));
}
BENCHMARK(BM_EnumeratePartitionsBipartite)->DenseRange(2, 4);

void BM_CircuitDistanceExample(benchmark::State& state) {
  const Network ex = example_graph();
  for (auto _ : state) benchmark::DoNotOptimize(circuit_distance(ex, kU1, kU2));
}
BENCHMARK(BM_CircuitDistanceExample);

void BM_EdgeDiameterBipartite(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Network net = random_complete_bipartite(m, m, 7);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(net, WalkMode::Edge));
}
BENCHMARK(BM_EdgeDiameterBipartite)->DenseRange(2, 3);

void BM_CircuitDiameterBipartite(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Network net = random_complete_bipartite(m, m, 7);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(net, WalkMode::Circuit));
}
BENCHMARK(BM_CircuitDiameterBipartite)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

// Builders from one vertex of a perturbed G^2 to all others.
void BM_WalkBuildersGk(benchmark::State& state) {
  const Network net = perturb_costs(family_gk(2), 3);
  const auto verts = enumerate_vertices(net).vertices;
  const bool edge = state.range(0) == 0;
  for (auto _ : state) {
    std::size_t total = 0;
    for (const Point& t : verts) {
      total += (edge ? edge_walk(net, verts.front(), t) : circuit_walk(net, verts.front(), t)).length();
    }
    benchmark::DoNotOptimize(total);
  }
  state.SetLabel(edge ? "edge_walk" : "circuit_walk");
}
BENCHMARK(BM_WalkBuildersGk)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
