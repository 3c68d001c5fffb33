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

#include "osa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "osa/assignment.hpp"

namespace osa {

void RunTrace::reserve(std::uint64_t slots) {
  const std::uint64_t cells = slots * static_cast<std::uint64_t>(users);
  channel.reserve(cells);
  reward.reserve(cells);
  su_collision.reserve(cells);
  pu_interference.reserve(cells);
}

void RunTrace::append(const SlotOutcome& outcome) {
  if (users == 0) users = static_cast<int>(outcome.users.size());
  if (static_cast<int>(outcome.users.size()) != users) {
    throw std::invalid_argument("RunTrace::append: user count changed mid-trace");
  }
  for (const auto& user : outcome.users) {
    channel.push_back(static_cast<std::int16_t>(user.channel));
    reward.push_back(user.reward);
    su_collision.push_back(user.su_collision);
    pu_interference.push_back(user.pu_interference);
  }
  ++horizon;
}

RegretTrace cumulative_regret(const RunTrace& trace, const Matrix& lambda_true) {
  if (trace.users != static_cast<int>(lambda_true.rows())) {
    throw std::invalid_argument("cumulative_regret: dimension mismatch");
  }
  RegretTrace out;
  out.optimal_value = hungarian_solve(lambda_true).value;
  out.cumulative.resize(trace.horizon + 1);
  out.cumulative[0] = 0.0;
  const double per_user_optimum = out.optimal_value / static_cast<double>(trace.users);
  for (std::uint64_t t = 0; t < trace.horizon; ++t) {
    int slot_reward = 0;
    for (int k = 0; k < trace.users; ++k) slot_reward += trace.reward_at(t, k);
    const double increment =
        per_user_optimum - static_cast<double>(slot_reward) / static_cast<double>(trace.users);
    out.cumulative[t + 1] = out.cumulative[t] + increment;
  }
  return out;
}

BoundParams BoundParams::from_symmetric(std::vector<double> lambda, int users, double alpha) {
  if (users < 1 || static_cast<std::size_t>(users) > lambda.size()) {
    throw std::invalid_argument("BoundParams: need 1 <= K <= N");
  }
  if (!(alpha > 1.0)) {
    throw std::invalid_argument("BoundParams: alpha must exceed 1");
  }
  BoundParams params;
  params.lambda = std::move(lambda);
  params.users = users;
  params.alpha = alpha;

  const int channels = static_cast<int>(params.lambda.size());
  std::vector<int> order(static_cast<std::size_t>(channels));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double la = params.lambda[static_cast<std::size_t>(a)];
    const double lb = params.lambda[static_cast<std::size_t>(b)];
    if (la != lb) return la > lb;
    return a < b;
  });

  params.optimal_set.assign(order.begin(), order.begin() + users);
  std::sort(params.optimal_set.begin(), params.optimal_set.end());

  double optimal_sum = 0.0;
  double worst_optimal = params.lambda[static_cast<std::size_t>(params.optimal_set.front())];
  for (int n : params.optimal_set) {
    const double l = params.lambda[static_cast<std::size_t>(n)];
    optimal_sum += l;
    worst_optimal = std::min(worst_optimal, l);
  }
  params.lambda_bar_star = optimal_sum / static_cast<double>(users);

  params.gaps.assign(static_cast<std::size_t>(channels), 0.0);
  for (int n = 0; n < channels; ++n) {
    if (std::find(params.optimal_set.begin(), params.optimal_set.end(), n) !=
        params.optimal_set.end()) {
      continue;
    }
    const double gap = worst_optimal - params.lambda[static_cast<std::size_t>(n)];
    if (!(gap > 0.0)) {
      throw std::invalid_argument("BoundParams: degenerate gap");
    }
    params.gaps[static_cast<std::size_t>(n)] = gap;
  }
  return params;
}

double logarithmic_regret_bound(const BoundParams& params, std::uint64_t t) {
  const double horizon_term =
      std::log(std::max<double>(1.0, static_cast<double>(t + static_cast<std::uint64_t>(params.users) - 1)));
  double coefficient = 0.0;
  for (std::size_t n = 0; n < params.lambda.size(); ++n) {
    const double gap = params.gaps[n];
    if (gap == 0.0) continue;  // optimal channel
    coefficient += 4.0 * params.alpha * (params.lambda_bar_star - params.lambda[n]) /
                   (static_cast<double>(params.users) * gap * gap);
  }
  return coefficient * horizon_term;
}

std::vector<double> optimal_set_fraction(const RunTrace& trace, const Matrix& lambda_true) {
  if (trace.users != static_cast<int>(lambda_true.rows())) {
    throw std::invalid_argument("optimal_set_fraction: dimension mismatch");
  }
  const std::vector<std::vector<int>> sets = optimal_channel_sets(lambda_true);
  const int channels = static_cast<int>(lambda_true.cols());
  std::vector<char> member(static_cast<std::size_t>(trace.users * channels), 0);
  for (int k = 0; k < trace.users; ++k) {
    for (int n : sets[static_cast<std::size_t>(k)]) {
      member[static_cast<std::size_t>(k * channels + n)] = 1;
    }
  }
  std::vector<double> fraction(trace.horizon + 1, 0.0);
  std::uint64_t member_user_slots = 0;
  for (std::uint64_t t = 0; t < trace.horizon; ++t) {
    for (int k = 0; k < trace.users; ++k) {
      const int chosen = trace.channel_at(t, k);
      member_user_slots += member[static_cast<std::size_t>(k * channels + chosen)];
    }
    fraction[t + 1] = static_cast<double>(member_user_slots) /
                      (static_cast<double>((t + 1) * static_cast<std::uint64_t>(trace.users)));
  }
  return fraction;
}

ThroughputTrace network_throughput(const std::vector<RunTrace>& traces, int packet_bytes) {
  if (traces.empty()) {
    throw std::invalid_argument("network_throughput: need at least one run");
  }
  const std::uint64_t horizon = traces.front().horizon;
  for (const RunTrace& trace : traces) {
    if (trace.horizon != horizon) {
      throw std::invalid_argument("network_throughput: traces have different horizons");
    }
  }
  ThroughputTrace out;
  out.packet_bytes = packet_bytes;
  out.ntp_bytes.assign(horizon, 0.0);
  for (const RunTrace& trace : traces) {
    for (std::uint64_t t = 0; t < horizon; ++t) {
      int slot_reward = 0;
      for (int k = 0; k < trace.users; ++k) slot_reward += trace.reward_at(t, k);
      out.ntp_bytes[t] += static_cast<double>(slot_reward * packet_bytes);
    }
  }
  const double runs = static_cast<double>(traces.size());
  for (double& v : out.ntp_bytes) v /= runs;
  return out;
}

}  // namespace osa
