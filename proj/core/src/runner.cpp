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

#include "osa/runner.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "osa/assignment.hpp"

namespace osa {

namespace {

std::vector<std::uint64_t> sampled_slots(std::uint64_t horizon, std::uint64_t stride) {
  std::vector<std::uint64_t> slots;
  for (std::uint64_t t = 0; t <= horizon; t += stride) slots.push_back(t);
  if (slots.back() != horizon) slots.push_back(horizon);
  return slots;
}

// Everything one run contributes to the aggregation.
struct RunSample {
  std::vector<double> regret;
  std::vector<double> ntp_bytes;
  std::vector<double> optimal_fraction;
  std::vector<double> pu_rate;
  std::vector<double> collision_rate;
  double tail_ntp_bytes = 0.0;
};

RunSample sample_run(const ScenarioConfig& cfg, const Matrix& lambda_true, std::uint64_t seed,
                     const std::vector<std::uint64_t>& slots, std::uint64_t tail_window) {
  const RunTrace trace = simulate_run(cfg, seed);
  const RegretTrace regret = cumulative_regret(trace, lambda_true);
  const std::vector<double> fraction = optimal_set_fraction(trace, lambda_true);

  const std::uint64_t horizon = trace.horizon;
  const int users = trace.users;

  std::vector<double> slot_bytes(horizon, 0.0);
  std::vector<double> pu_cumulative(horizon + 1, 0.0);
  std::vector<double> collision_cumulative(horizon + 1, 0.0);
  for (std::uint64_t t = 0; t < horizon; ++t) {
    int rewards = 0, pu = 0, collisions = 0;
    for (int k = 0; k < users; ++k) {
      const std::uint64_t cell = t * static_cast<std::uint64_t>(users) + static_cast<std::uint64_t>(k);
      rewards += trace.reward[cell];
      pu += trace.pu_interference[cell];
      collisions += trace.su_collision[cell];
    }
    slot_bytes[t] = static_cast<double>(rewards * cfg.packet_bytes);
    pu_cumulative[t + 1] = pu_cumulative[t] + pu;
    collision_cumulative[t + 1] = collision_cumulative[t] + collisions;
  }

  RunSample sample;
  sample.regret.reserve(slots.size());
  sample.ntp_bytes.reserve(slots.size());
  sample.optimal_fraction.reserve(slots.size());
  sample.pu_rate.reserve(slots.size());
  sample.collision_rate.reserve(slots.size());
  for (const std::uint64_t t : slots) {
    sample.regret.push_back(regret.cumulative[t]);
    sample.ntp_bytes.push_back(t == 0 ? 0.0 : slot_bytes[t - 1]);
    sample.optimal_fraction.push_back(fraction[t]);
    const double user_slots = t == 0 ? 1.0 : static_cast<double>(t) * users;
    sample.pu_rate.push_back(pu_cumulative[t] / user_slots);
    sample.collision_rate.push_back(collision_cumulative[t] / user_slots);
  }

  const std::uint64_t window = std::min(tail_window, horizon);
  double tail_total = 0.0;
  for (std::uint64_t t = horizon - window; t < horizon; ++t) tail_total += slot_bytes[t];
  sample.tail_ntp_bytes = window == 0 ? 0.0 : tail_total / static_cast<double>(window);
  return sample;
}

void mean_and_se(const std::vector<RunSample>& samples,
                 std::vector<double> RunSample::*field, std::size_t i, double* mean_out,
                 double* se_out) {
  const double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (const RunSample& s : samples) mean += (s.*field)[i];
  mean /= n;
  double variance = 0.0;
  if (samples.size() > 1) {
    for (const RunSample& s : samples) {
      const double d = (s.*field)[i] - mean;
      variance += d * d;
    }
    variance /= (n - 1.0);
  }
  if (mean_out) *mean_out = mean;
  if (se_out) *se_out = std::sqrt(variance / n);
}

}  // namespace

RunTrace simulate_run(const ScenarioConfig& cfg, std::uint64_t seed) {
  SecondaryNetworkEngine engine(cfg.make_environment(), cfg.policy, seed);
  RunTrace trace;
  trace.users = cfg.users;
  trace.reserve(cfg.horizon);
  for (std::uint64_t t = 0; t < cfg.horizon; ++t) {
    trace.append(engine.step());
  }
  engine.finish();
  return trace;
}

BatchResult run_batch(const ScenarioConfig& cfg, int threads, std::uint64_t tail_window) {
  BatchResult result;
  result.summary.warnings = cfg.validate();

  const Matrix lambda_true = cfg.true_quality_matrix();
  const std::vector<std::uint64_t> slots = sampled_slots(cfg.horizon, cfg.stride);

  const int runs = cfg.runs;
  std::vector<RunSample> samples(static_cast<std::size_t>(runs));

  int worker_count = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (worker_count < 1) worker_count = 1;
  worker_count = std::min(worker_count, runs);

  std::atomic<int> next_run{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(worker_count));
  for (int w = 0; w < worker_count; ++w) {
    workers.emplace_back([&, w] {
      try {
        while (true) {
          const int i = next_run.fetch_add(1);
          if (i >= runs) break;
          samples[static_cast<std::size_t>(i)] =
              sample_run(cfg, lambda_true, cfg.base_seed + static_cast<std::uint64_t>(i), slots,
                         tail_window);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (std::thread& worker : workers) worker.join();
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  SampledTrace& trace = result.trace;
  trace.slots = slots;
  const std::size_t count = slots.size();
  trace.mean_regret.resize(count);
  trace.se_regret.resize(count);
  trace.mean_ntp_bytes.resize(count);
  trace.se_ntp.resize(count);
  trace.optimal_set_fraction.resize(count);
  trace.pu_interference_rate.resize(count);
  trace.su_collision_rate.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    mean_and_se(samples, &RunSample::regret, i, &trace.mean_regret[i], &trace.se_regret[i]);
    mean_and_se(samples, &RunSample::ntp_bytes, i, &trace.mean_ntp_bytes[i], &trace.se_ntp[i]);
    mean_and_se(samples, &RunSample::optimal_fraction, i, &trace.optimal_set_fraction[i], nullptr);
    mean_and_se(samples, &RunSample::pu_rate, i, &trace.pu_interference_rate[i], nullptr);
    mean_and_se(samples, &RunSample::collision_rate, i, &trace.su_collision_rate[i], nullptr);
  }

  BatchSummary& summary = result.summary;
  summary.optimal_value = hungarian_solve(lambda_true).value;
  summary.regret_at_horizon = trace.mean_regret.back();
  summary.final_optimal_set_fraction = trace.optimal_set_fraction.back();
  summary.pu_interference_rate = trace.pu_interference_rate.back();
  summary.su_collision_rate = trace.su_collision_rate.back();
  summary.tail_window = std::min(tail_window, cfg.horizon);
  double tail = 0.0;
  for (const RunSample& s : samples) tail += s.tail_ntp_bytes;
  summary.tail_mean_ntp_bytes = tail / static_cast<double>(runs);
  return result;
}

}  // namespace osa
