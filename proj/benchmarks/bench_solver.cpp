#include <benchmark/benchmark.h>

#include "hamex/generators.hpp"
#include "hamex/pipeline.hpp"
#include "hamex/reduction.hpp"
#include "hamex/rotation.hpp"

using namespace hamex;

static void BM_FindHamiltonCycle(benchmark::State& state) {
  SolverConfig cfg;
  Graph g = random_regular(static_cast<std::size_t>(state.range(0)), 20, 1);
  for (auto _ : state) {
    auto rep = find_hamilton_cycle(g, cfg);
    benchmark::DoNotOptimize(rep.sequence);
  }
}
BENCHMARK(BM_FindHamiltonCycle)->Arg(600)->Arg(1000)->Arg(2000)
    ->Unit(benchmark::kMillisecond);

static void BM_EndpointReach(benchmark::State& state) {
  SolverConfig cfg;
  Graph g = random_regular(1000, 20, 2);
  LinearForest f = reduce_forest(g, initial_forest(g, cfg), cfg);
  Vertex v = f.end_vertices().front();
  ReachOptions opts;
  opts.max_order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto reach = endpoint_reach(g, f, v, VertexSet::full(1000), opts);
    benchmark::DoNotOptimize(reach);
  }
}
BENCHMARK(BM_EndpointReach)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ReduceForest(benchmark::State& state) {
  SolverConfig cfg;
  Graph g = random_regular(static_cast<std::size_t>(state.range(0)), 20, 3);
  for (auto _ : state) {
    auto f = reduce_forest(g, initial_forest(g, cfg), cfg);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_ReduceForest)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
