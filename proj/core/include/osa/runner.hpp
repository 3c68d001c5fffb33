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

#ifndef OSA_RUNNER_HPP
#define OSA_RUNNER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "osa/metrics.hpp"
#include "osa/scenario.hpp"

namespace osa {

/// Cross-run statistics at the sampled slots (slot 0, every stride-th slot,
/// and the horizon). A row at slot t describes the state after t slots:
/// cumulative columns cover slots [0, t), and mean_ntp_bytes is the byte
/// count of slot t-1 averaged over runs (0 at t = 0).
struct SampledTrace {
  std::vector<std::uint64_t> slots;
  std::vector<double> mean_regret;
  std::vector<double> se_regret;
  std::vector<double> mean_ntp_bytes;
  std::vector<double> se_ntp;
  std::vector<double> optimal_set_fraction;
  std::vector<double> pu_interference_rate;  // events per user-slot, cumulative
  std::vector<double> su_collision_rate;     // events per user-slot, cumulative
};

struct BatchSummary {
  double regret_at_horizon = 0.0;         // mean over runs
  double tail_mean_ntp_bytes = 0.0;       // time average over the last tail_window slots
  std::uint64_t tail_window = 0;
  double final_optimal_set_fraction = 0.0;
  double pu_interference_rate = 0.0;
  double su_collision_rate = 0.0;
  double optimal_value = 0.0;  // V* of the true quality matrix
  std::vector<std::string> warnings;
};

struct BatchResult {
  SampledTrace trace;
  BatchSummary summary;
};

/// One seeded run of the configured policy; returns the full per-slot trace.
RunTrace simulate_run(const ScenarioConfig& cfg, std::uint64_t seed);

/// Executes cfg.runs independent runs with seeds base_seed + i, computes the
/// per-run metric traces, and aggregates mean and standard error per sampled
/// slot. Runs may execute on several threads (0 = one per core); the
/// reduction is ordered by run index, so the output depends only on
/// (config, base seed).
BatchResult run_batch(const ScenarioConfig& cfg, int threads = 0,
                      std::uint64_t tail_window = 5000);

}  // namespace osa

#endif  // OSA_RUNNER_HPP
