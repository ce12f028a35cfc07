#include <benchmark/benchmark.h>

#include <numeric>

#include "wsnloc/experiment.hpp"

using namespace wsnloc;

namespace {

Deployment make_deployment(std::size_t unknowns, std::size_t anchors) {
  RngStream rng(7);
  const FieldSpec field{100, 100};
  Deployment d{field, deploy_anchors_random(field, anchors, rng), {}};
  d.unknowns = deploy_unknowns_uniform(field, unknowns, rng);
  return d;
}

}  // namespace

static void BM_BuildGraph(benchmark::State& state) {
  const auto d = make_deployment(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_graph(d, scaled_range(10.0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraph)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_ComputeHops(benchmark::State& state) {
  const auto d = make_deployment(static_cast<std::size_t>(state.range(0)), 10);
  const auto g = build_graph(d, scaled_range(10.0));
  std::vector<std::size_t> anchors(10);
  std::iota(anchors.begin(), anchors.end(), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute_hops(g, anchors));
  }
}
BENCHMARK(BM_ComputeHops)->RangeMultiplier(2)->Range(64, 1024);

static void BM_Multilaterate(benchmark::State& state) {
  const std::vector<Point2D> a{{0, 0}, {100, 0}, {0, 100}, {100, 100}, {50, 20}, {20, 70}};
  std::vector<double> d;
  for (const auto& p : a) d.push_back(distance(p, {37, 61}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(multilaterate(a, d));
  }
}
BENCHMARK(BM_Multilaterate);

static void BM_RunTrial(benchmark::State& state) {
  const ExperimentConfig cfg;
  std::size_t t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trial(cfg, t++));
  }
}
BENCHMARK(BM_RunTrial);

BENCHMARK_MAIN();
