#include <benchmark/benchmark.h>

#include "dd2/generators.hpp"
#include "dd2/graph_ops.hpp"
#include "dd2/minimal.hpp"
#include "dd2/optimize.hpp"
#include "dd2/recognition.hpp"

using namespace dd2;

namespace {

Graph corona_of_path(std::size_t n) { return gen::corona(gen::path(n / 2), 1); }

void BM_IsDD2Path(benchmark::State& state) {
  const Graph g = gen::path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_dd2(g).is_dd2);
  state.SetComplexityN(state.range(0));
}

void BM_IsDD2Corona(benchmark::State& state) {
  const Graph g = corona_of_path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_dd2(g).is_dd2);
  state.SetComplexityN(state.range(0));
}

void BM_IsMinimalPath(benchmark::State& state) {
  const Graph g = gen::path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal_dd2(g).is_minimal);
  state.SetComplexityN(state.range(0));
}

void BM_IsMinimalSubdividedCorona(benchmark::State& state) {
  const auto h = gen::random_corona_multigraph(static_cast<std::size_t>(state.range(0)) / 4, 0, 1, 7);
  const Graph g = subdivision_graph(h).graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal_dd2(g).is_minimal);
  state.SetComplexityN(static_cast<benchmark::IterationCount>(g.order()));
}

void BM_SubdivisionPlan(benchmark::State& state) {
  const Graph g = corona_of_path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_subdivisions_to_dd2(g).count);
  state.SetComplexityN(state.range(0));
}

void BM_GammaGamma2(benchmark::State& state) {
  const Graph g = gen::cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_gamma2(g)->value);
}

}  // namespace

BENCHMARK(BM_IsDD2Path)->RangeMultiplier(2)->Range(1 << 12, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK(BM_IsDD2Corona)->RangeMultiplier(2)->Range(1 << 12, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK(BM_IsMinimalPath)->RangeMultiplier(2)->Range(1 << 12, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK(BM_IsMinimalSubdividedCorona)->RangeMultiplier(2)->Range(1 << 12, 1 << 18)->Complexity(benchmark::oN);
BENCHMARK(BM_SubdivisionPlan)->DenseRange(8, 32, 8);
BENCHMARK(BM_GammaGamma2)->DenseRange(6, 14, 4);
BENCHMARK_MAIN();
