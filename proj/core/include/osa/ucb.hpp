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

#ifndef OSA_UCB_HPP
#define OSA_UCB_HPP

#include <cstdint>
#include <vector>

#include "osa/matrix.hpp"

namespace osa {

/// Whether the K users pool their observations into one common learner row
/// (reward sharing) or keep K separate per-user rows.
enum class LearnerMode { kShared, kIndividual };

/// The index matrix B(t) handed to the coordinator: row k holds the indices
/// of learner ((k + t) mod K), so the rows cycle through the users slot by
/// slot and ties in the assignment rotate fairly.
struct IndexMatrix {
  Matrix values;
  std::uint64_t slot = 0;
};

/// UCB1 statistics: pull counts and reward sums per (learner row, channel),
/// plus the slot clock that feeds the exploration bias.
class UcbState {
 public:
  UcbState(LearnerMode mode, int users, int channels, double alpha);

  LearnerMode mode() const { return mode_; }
  int users() const { return users_; }
  int channels() const { return channels_; }
  int learners() const { return static_cast<int>(pulls_.size()); }
  double alpha() const { return alpha_; }

  /// Row that stores user k's observations: 0 in shared mode, k otherwise.
  int learner_of(int user) const { return mode_ == LearnerMode::kShared ? 0 : user; }

  /// Folds one observation into a learner row. The clock is advanced
  /// separately, once per slot, however many observations the slot produced.
  void record(int learner, int channel, double reward);

  void advance_clock() { ++clock_; }
  std::uint64_t clock() const { return clock_; }

  std::uint64_t pulls(int learner, int channel) const;
  double reward_sum(int learner, int channel) const;
  double mean(int learner, int channel) const;

  /// B = W-bar + sqrt(alpha ln(t) / T_n). Unexplored channels (T_n = 0) get
  /// +infinity so the coordinator is forced to visit them; ln is evaluated at
  /// max(t, 1) so slot 0 never sees ln(0).
  double index(int learner, int channel, std::uint64_t t) const;

  /// K x N matrix whose row k is the index row of learner k (shared mode:
  /// the common row replicated). No row rotation applied.
  Matrix learner_matrix(std::uint64_t t) const;

  /// The rotated B(t): row k = learner_matrix row ((k + t) mod K).
  IndexMatrix index_matrix(std::uint64_t t) const;

 private:
  LearnerMode mode_;
  int users_;
  int channels_;
  double alpha_;
  std::uint64_t clock_ = 0;
  std::vector<std::vector<std::uint64_t>> pulls_;
  std::vector<std::vector<double>> reward_sums_;
};

}  // namespace osa

#endif  // OSA_UCB_HPP
