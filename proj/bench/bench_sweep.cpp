/*
Copyright 2026 The EdgePlacer Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Serial vs OpenMP sweep, and layered-graph DP vs exhaustive frame search.

#include <benchmark/benchmark.h>

#include <random>

#include "edgeplacer/harness.hpp"
#include "edgeplacer/policies.hpp"
#include "edgeplacer/verify.hpp"

using namespace edgeplacer;

namespace {

ExperimentConfig sweep_config() {
  ExperimentConfig cfg;
  cfg.horizon = 600;
  cfg.policies = {PolicyKind::osp, PolicyKind::psp, PolicyKind::psp_wu, PolicyKind::lm};
  cfg.policy.v = 100.0;
  cfg.policy.theta = 50.0;
  cfg.policy.beta = 0.65;
  cfg.predictor.accuracies = accuracy_presets::lstm;
  cfg.axis = SweepAxis::v;
  cfg.axis_values = {1, 10, 100, 1000, 4000, 10000};
  return cfg;
}

void BM_SweepSerial(benchmark::State &state) {
  const ExperimentConfig cfg = sweep_config();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(cfg));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State &state) {
  const ExperimentConfig cfg = sweep_config();
  for (auto _ : state) benchmark::DoNotOptimize(sweep(cfg, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FrameDp(benchmark::State &state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto len = static_cast<std::size_t>(state.range(1));
  const FrameInstance inst = random_frame_instance(rng, n, len, 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psp_frame_decide(inst.cfg, inst.frame, inst.scenario, inst.e_avg));
  }
}
BENCHMARK(BM_FrameDp)->Args({6, 3})->Args({6, 6})->Args({10, 6});

void BM_FrameBruteForce(benchmark::State &state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto len = static_cast<std::size_t>(state.range(1));
  const FrameInstance inst = random_frame_instance(rng, n, len, 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_frame(inst.frame, inst.scenario, inst.e_avg, inst.cfg));
  }
}
BENCHMARK(BM_FrameBruteForce)->Args({6, 3})->Args({6, 6})->Args({10, 6});

}  // namespace

BENCHMARK_MAIN();
