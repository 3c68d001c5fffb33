// Copyright 2026 The osa-sim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "osa/runner.hpp"
#include "osa/scenario.hpp"

namespace {

void BM_SlotStep(benchmark::State& state, const char* preset, const char* coordination,
                 int r_period) {
  osa::ScenarioConfig cfg = osa::preset_scenario(preset);
  cfg.policy.coordination = osa::coordination_from_string(coordination);
  cfg.policy.r_period = r_period;
  osa::SecondaryNetworkEngine engine(cfg.make_environment(), cfg.policy, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.step());
  }
}
BENCHMARK_CAPTURE(BM_SlotStep, scenario1_round_robin, "scenario1", "round_robin", 3);
BENCHMARK_CAPTURE(BM_SlotStep, scenario1_hungarian_shared, "scenario1", "hungarian", 3);
BENCHMARK_CAPTURE(BM_SlotStep, scenario2_hungarian_per_slot, "scenario2", "hungarian", 1);
BENCHMARK_CAPTURE(BM_SlotStep, throughput_c4, "throughput-c4", "round_robin", 4);

void BM_BaselineStep(benchmark::State& state, const char* preset) {
  osa::ScenarioConfig cfg = osa::preset_scenario(preset);
  osa::SecondaryNetworkEngine engine(cfg.make_environment(), cfg.policy, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.step());
  }
}
BENCHMARK_CAPTURE(BM_BaselineStep, random_c1, "throughput-c1");
BENCHMARK_CAPTURE(BM_BaselineStep, individual_ucb_c2, "throughput-c2");
BENCHMARK_CAPTURE(BM_BaselineStep, cooperative_ucb_c3, "throughput-c3");

void BM_ShortBatch(benchmark::State& state) {
  osa::ScenarioConfig cfg = osa::preset_scenario("scenario1");
  cfg.horizon = 2000;
  cfg.runs = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(osa::run_batch(cfg, 1));
  }
}
BENCHMARK(BM_ShortBatch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
