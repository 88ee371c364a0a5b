#include <benchmark/benchmark.h>

#include <random>

#include "chordal/generators.hpp"
#include "chordal/hadwiger.hpp"
#include "chordal/suites.hpp"
#include "chordal/transforms.hpp"
#include "chordal/treewidth.hpp"

using namespace chordal;

static void BM_TreewidthExactGrid(benchmark::State& state) {
  Graph g = grid_graph(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(treewidth_exact(g).width);
}
BENCHMARK(BM_TreewidthExactGrid)->DenseRange(2, 4);

static void BM_HadwigerComplete(benchmark::State& state) {
  Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hadwiger_exact(g).value);
}
BENCHMARK(BM_HadwigerComplete)->DenseRange(4, 8, 2);

static void BM_WidthBoundsRandom(benchmark::State& state) {
  std::mt19937_64 rng(0);
  std::vector<CircularDrawing> drawings;
  for (int i = 0; i < 16; ++i) drawings.push_back(random_circular_drawing(rng, 9, 14));
  BoundsOptions options;
  options.minor_chain = false;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_width_bounds(drawings[i++ % drawings.size()], options).tw_p);
  }
}
BENCHMARK(BM_WidthBoundsRandom);

static void BM_Nok2kEnumeration(benchmark::State& state) {
  SuiteOptions options;
  options.params = {2};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("nok2k", options).instances);
}
BENCHMARK(BM_Nok2kEnumeration)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
