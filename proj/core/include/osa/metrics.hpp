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

#ifndef OSA_METRICS_HPP
#define OSA_METRICS_HPP

#include <cstdint>
#include <vector>

#include "osa/matrix.hpp"
#include "osa/policy.hpp"

namespace osa {

/// Compact per-run record of what every user did each slot.
struct RunTrace {
  int users = 0;
  std::uint64_t horizon = 0;
  std::vector<std::int16_t> channel;
  std::vector<std::uint8_t> reward;
  std::vector<std::uint8_t> su_collision;
  std::vector<std::uint8_t> pu_interference;

  void reserve(std::uint64_t slots);
  void append(const SlotOutcome& outcome);

  int channel_at(std::uint64_t t, int user) const {
    return channel[t * static_cast<std::uint64_t>(users) + static_cast<std::uint64_t>(user)];
  }
  int reward_at(std::uint64_t t, int user) const {
    return reward[t * static_cast<std::uint64_t>(users) + static_cast<std::uint64_t>(user)];
  }
};

/// Cumulative per-user-averaged regret against the best assignment of the
/// true quality matrix; cumulative[t] covers the first t slots, so
/// cumulative[0] == 0.
struct RegretTrace {
  std::vector<double> cumulative;
  double optimal_value = 0.0;  // V*, total weight of the best assignment
};

/// Per-slot increment V*/K - (1/K) sum_k r_k, accumulated over the trace.
/// Throws on user-count mismatch between trace and quality matrix.
RegretTrace cumulative_regret(const RunTrace& trace, const Matrix& lambda_true);

/// Inputs of the logarithmic regret bound for a symmetric network: the
/// common quality row, the optimal set D* (top-K channels), their mean
/// lambda_bar_star, and the gap of every suboptimal channel to the worst
/// optimal one.
struct BoundParams {
  std::vector<double> lambda;
  int users = 0;
  double alpha = 0.0;
  std::vector<int> optimal_set;
  double lambda_bar_star = 0.0;
  std::vector<double> gaps;  // gaps[n] = min_{D*} lambda - lambda_n; 0 inside D*

  /// Throws "alpha must exceed 1" when the bound's precondition fails and
  /// "degenerate gap" when a suboptimal channel ties the optimal set.
  static BoundParams from_symmetric(std::vector<double> lambda, int users, double alpha);
};

/// sum_{n not in D*} 4 alpha (lambda_bar_star - lambda_n) / (K gap_n^2)
/// * ln(t + K - 1). The vanishing o(ln t) remainder is dropped; callers that
/// compare empirical regret against this allow a documented x2 slack for it.
double logarithmic_regret_bound(const BoundParams& params, std::uint64_t t);

/// Cumulative fraction of user-slots spent inside the user's optimal set
/// (channels appearing in at least one value-optimal assignment of
/// lambda_true). Entry t covers the first t slots; entry 0 is 0.
std::vector<double> optimal_set_fraction(const RunTrace& trace, const Matrix& lambda_true);

/// Per-slot network throughput in bytes, averaged across runs:
/// NTP(t) = mean over runs of sum_k packet_bytes * reward_k(t).
struct ThroughputTrace {
  std::vector<double> ntp_bytes;
  int packet_bytes = 0;
};

ThroughputTrace network_throughput(const std::vector<RunTrace>& traces, int packet_bytes);

}  // namespace osa

#endif  // OSA_METRICS_HPP
