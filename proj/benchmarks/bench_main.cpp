#include <benchmark/benchmark.h>

#include "diamondplot/datasets.hpp"
#include "diamondplot/random.hpp"
#include "diamondplot/scene.hpp"
#include "diamondplot/stats.hpp"
#include "diamondplot/svg.hpp"
#include "diamondplot/ticks.hpp"

namespace {

using namespace diamondplot;

DataSet sample(std::int64_t n) {
  return sample_bivariate_normal({0, 0, 1.5, 1, 0.75, static_cast<std::size_t>(n), 42});
}

void BM_Sample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sample(state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Range(300, 100000);

void BM_Summary(benchmark::State& state) {
  const DataSet d = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(summary(d));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Summary)->Range(300, 100000);

void BM_BuildScene(benchmark::State& state) {
  const DataSet d = sample(state.range(0));
  const PlotConfig cfg = PlotConfig::defaults(Orientation::Diamond);
  for (auto _ : state) benchmark::DoNotOptimize(build_scene(d, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildScene)->Range(300, 100000);

void BM_Render(benchmark::State& state) {
  const Scene s = build_scene(sample(state.range(0)), PlotConfig::defaults(Orientation::Diamond));
  for (auto _ : state) benchmark::DoNotOptimize(render(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Render)->Range(300, 100000);

void BM_Ticks(benchmark::State& state) {
  double lo = -7.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nice_ticks(lo, lo + 123.4, 5));
    lo += 1e-3;
  }
}
BENCHMARK(BM_Ticks);

void BM_AnscombeScene(benchmark::State& state) {
  const DataSet d = builtin("anscombe1");
  const PlotConfig cfg = PlotConfig::defaults(Orientation::Diamond);
  for (auto _ : state) benchmark::DoNotOptimize(render(build_scene(d, cfg)));
}
BENCHMARK(BM_AnscombeScene);

}  // namespace

BENCHMARK_MAIN();
