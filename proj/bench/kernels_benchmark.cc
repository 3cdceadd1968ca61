// Copyright 2026 The Dirichlet Privacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP for the three experiment kernels. Arg 0 runs
// serially, arg 1 in parallel.

#include <cstdlib>

#include "benchmark/benchmark.h"
#include "dirichlet_privacy/benchmarks.h"
#include "dirichlet_privacy/parallel.h"
#include "dirichlet_privacy/psrl.h"

namespace dirichlet_privacy {
namespace {

Execution ModeOf(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void SetLabel(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_HistogramBenchmark(benchmark::State& state) {
  HistogramBenchmarkConfig config;
  config.dimensions = {1000};
  config.epsilons = {0.1};
  config.sample_sizes = {100, 10000, 1000000};
  config.trials = 20;
  for (auto _ : state) {
    auto rows = RunHistogramBenchmark(config, 1, ModeOf(state));
    if (!rows.ok()) std::abort();
    benchmark::DoNotOptimize(rows->data());
  }
  SetLabel(state);
}
BENCHMARK(BM_HistogramBenchmark)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_KlUtilityBenchmark(benchmark::State& state) {
  KlUtilityConfig config;
  config.etas = {0.5, 1.0, 10.0};
  config.epsilons = {0.01, 0.1, 1.0};
  config.sample_sizes = {100, 1000, 10000};
  config.draws = 200;
  for (auto _ : state) {
    auto rows = RunKlUtilityBenchmark(config, 1, ModeOf(state));
    if (!rows.ok()) std::abort();
    benchmark::DoNotOptimize(rows->data());
  }
  SetLabel(state);
}
BENCHMARK(BM_KlUtilityBenchmark)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PsrlBenchmark(benchmark::State& state) {
  const TabularMdp mdp = *RiverSwim();
  PsrlBenchmarkConfig config;
  config.epsilons = {1.0};
  config.episodes = 100;
  config.repetitions = 8;
  for (auto _ : state) {
    auto rows = RunPsrlBenchmark(mdp, config, 1, ModeOf(state));
    if (!rows.ok()) std::abort();
    benchmark::DoNotOptimize(rows->data());
  }
  SetLabel(state);
}
BENCHMARK(BM_PsrlBenchmark)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dirichlet_privacy

BENCHMARK_MAIN();
