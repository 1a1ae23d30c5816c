// Serial reference vs OpenMP kernels on the reference-scale frame problem.
#include <benchmark/benchmark.h>

#include "aoi/oracle.hpp"
#include "aoi/solver.hpp"

namespace {

aoi::FrameConfig reference_frame() {
  aoi::FrameConfig cfg;
  cfg.penalty_weight = 5.0;
  return cfg;
}

const aoi::ChannelModel kChannel = aoi::ChannelModel::gilbert_elliot(0.9, 0.6, 0.9, 0.6);

void BM_SolveReference(benchmark::State& state) {
  const aoi::FrameProblem problem(reference_frame(), kChannel);
  for (auto _ : state) benchmark::DoNotOptimize(problem.solve_reference(33.0));
}
BENCHMARK(BM_SolveReference)->Unit(benchmark::kMillisecond);

void BM_SolveParallel(benchmark::State& state) {
  const aoi::FrameProblem problem(reference_frame(), kChannel);
  for (auto _ : state) benchmark::DoNotOptimize(problem.solve(33.0));
}
BENCHMARK(BM_SolveParallel)->Unit(benchmark::kMillisecond);

void BM_MonteCarloSerial(benchmark::State& state) {
  const auto cfg = reference_frame();
  const auto rule = aoi::oracle::rule_from_table(aoi::backward_solve(cfg, 33.0, kChannel));
  const aoi::SystemState s0{1, cfg.packets_per_frame, aoi::ChannelState{}};
  for (auto _ : state)
    benchmark::DoNotOptimize(aoi::oracle::monte_carlo_value_serial(rule, s0, 33.0, cfg, kChannel, state.range(0), 7));
}
BENCHMARK(BM_MonteCarloSerial)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_MonteCarloParallel(benchmark::State& state) {
  const auto cfg = reference_frame();
  const auto rule = aoi::oracle::rule_from_table(aoi::backward_solve(cfg, 33.0, kChannel));
  const aoi::SystemState s0{1, cfg.packets_per_frame, aoi::ChannelState{}};
  for (auto _ : state)
    benchmark::DoNotOptimize(aoi::oracle::monte_carlo_value(rule, s0, 33.0, cfg, kChannel, state.range(0), 7));
}
BENCHMARK(BM_MonteCarloParallel)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
