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

#include "osa/ucb.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace osa {

UcbState::UcbState(LearnerMode mode, int users, int channels, double alpha)
    : mode_(mode), users_(users), channels_(channels), alpha_(alpha) {
  if (users < 1 || channels < 1) {
    throw std::invalid_argument("UcbState: users and channels must be positive");
  }
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("UcbState: alpha must be non-negative");
  }
  const int rows = mode == LearnerMode::kShared ? 1 : users;
  pulls_.assign(static_cast<std::size_t>(rows),
                std::vector<std::uint64_t>(static_cast<std::size_t>(channels), 0));
  reward_sums_.assign(static_cast<std::size_t>(rows),
                      std::vector<double>(static_cast<std::size_t>(channels), 0.0));
}

void UcbState::record(int learner, int channel, double reward) {
  if (learner < 0 || learner >= learners() || channel < 0 || channel >= channels_) {
    throw std::out_of_range("UcbState::record: index out of range");
  }
  pulls_[static_cast<std::size_t>(learner)][static_cast<std::size_t>(channel)] += 1;
  reward_sums_[static_cast<std::size_t>(learner)][static_cast<std::size_t>(channel)] += reward;
}

std::uint64_t UcbState::pulls(int learner, int channel) const {
  return pulls_[static_cast<std::size_t>(learner)][static_cast<std::size_t>(channel)];
}

double UcbState::reward_sum(int learner, int channel) const {
  return reward_sums_[static_cast<std::size_t>(learner)][static_cast<std::size_t>(channel)];
}

double UcbState::mean(int learner, int channel) const {
  const std::uint64_t n = pulls(learner, channel);
  return n == 0 ? 0.0 : reward_sum(learner, channel) / static_cast<double>(n);
}

double UcbState::index(int learner, int channel, std::uint64_t t) const {
  const std::uint64_t n = pulls(learner, channel);
  if (n == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const double log_t = std::log(static_cast<double>(t < 1 ? 1 : t));
  return mean(learner, channel) + std::sqrt(alpha_ * log_t / static_cast<double>(n));
}

Matrix UcbState::learner_matrix(std::uint64_t t) const {
  Matrix m(static_cast<std::size_t>(users_), static_cast<std::size_t>(channels_));
  for (int k = 0; k < users_; ++k) {
    const int row = learner_of(k);
    for (int n = 0; n < channels_; ++n) {
      m(static_cast<std::size_t>(k), static_cast<std::size_t>(n)) = index(row, n, t);
    }
  }
  return m;
}

IndexMatrix UcbState::index_matrix(std::uint64_t t) const {
  const Matrix base = learner_matrix(t);
  IndexMatrix out;
  out.slot = t;
  out.values = Matrix(base.rows(), base.cols());
  const std::uint64_t k_users = static_cast<std::uint64_t>(users_);
  for (std::uint64_t k = 0; k < k_users; ++k) {
    const std::uint64_t rotated = (k + t) % k_users;
    out.values.set_row(k, base.row(rotated));
  }
  return out;
}

}  // namespace osa
