// OpenMP kernels against their serial reference implementations.

#include <benchmark/benchmark.h>

#include "adiawalk/grover.hpp"
#include "adiawalk/spectral.hpp"
#include "adiawalk/toymodels.hpp"

using namespace adiawalk;

namespace {

WalkGenerator four_level_generator() {
  const auto m = build_toy({ToyKind::FourLevel, 0.0});
  return WalkGenerator(m.h0, m.h1, m.schedule, IntegratorKind::pf2(), 1.0, 4000);
}

void BM_BuildFamily(benchmark::State& state) {
  const auto gen = four_level_generator();
  for (auto _ : state) benchmark::DoNotOptimize(build_walk_family(gen, 4000));
}

void BM_BuildFamilySerial(benchmark::State& state) {
  const auto gen = four_level_generator();
  for (auto _ : state) benchmark::DoNotOptimize(build_walk_family_serial(gen, 4000));
}

void BM_DecomposeFamily(benchmark::State& state) {
  const auto fam = build_walk_family(four_level_generator(), 4000);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_family(fam));
}

void BM_DecomposeFamilySerial(benchmark::State& state) {
  const auto fam = build_walk_family(four_level_generator(), 4000);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_family_serial(fam));
}

const std::vector<double> kTimes{1000.0, 3000.0};
const std::vector<double> kSteps{1.0, 0.5, 0.25};

void BM_FidelitySweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_sweep(0.0, kTimes, kSteps));
}

void BM_FidelitySweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_sweep_serial(0.0, kTimes, kSteps));
}

const GroverScheduleSpec kPower{GroverScheduleKind::Power, 1.0};

void BM_Scaling(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scaling_experiment({1, 2}, {1u << 8, 1u << 10}, kPower, 0.1));
}

void BM_ScalingSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scaling_experiment_serial({1, 2}, {1u << 8, 1u << 10}, kPower, 0.1));
}

}  // namespace

BENCHMARK(BM_BuildFamily)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildFamilySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DecomposeFamily)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DecomposeFamilySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FidelitySweep)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FidelitySweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Scaling)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ScalingSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
