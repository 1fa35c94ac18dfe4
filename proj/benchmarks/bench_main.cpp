#include "ricciforge/ricciforge.hpp"

#include <benchmark/benchmark.h>

using namespace ricciforge;

static void BM_FormanFieldIcosphere(benchmark::State& state) {
  const auto c = gen::icosphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(forman_field(c));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.num_edges()));
}
BENCHMARK(BM_FormanFieldIcosphere)->DenseRange(2, 4);

static void BM_FormanGeneralCubeGrid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = gen::cube_grid(n, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(forman_field(c, FormanVariant::General));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(c.num_edges()));
}
BENCHMARK(BM_FormanGeneralCubeGrid)->Arg(4)->Arg(8);

static void BM_WaldQuadruple(benchmark::State& state) {
  const auto q = MetricQuadruple::from_points({Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}, Vec3{-0.6, -0.6, 0.52915}});
  for (auto _ : state) benchmark::DoNotOptimize(wald_quadruple_curvature(q));
}
BENCHMARK(BM_WaldQuadruple);

static void BM_MetricFlowStep(benchmark::State& state) {
  const auto c = gen::perturb_radially(gen::icosphere(static_cast<int>(state.range(0))), 0.1, 7);
  FlowConfig cfg;
  cfg.method = FlowMethod::MetricSymmetric;
  cfg.normalized = true;
  const auto K = vertex_backend(cfg.backend);
  for (auto _ : state) benchmark::DoNotOptimize(metric_flow_step_symmetric(c, K, cfg));
}
BENCHMARK(BM_MetricFlowStep)->DenseRange(2, 4);

static void BM_BuildDual(benchmark::State& state) {
  const auto c = gen::icosphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_dual(c));
}
BENCHMARK(BM_BuildDual)->DenseRange(2, 4);

BENCHMARK_MAIN();
