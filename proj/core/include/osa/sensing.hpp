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

#ifndef OSA_SENSING_HPP
#define OSA_SENSING_HPP

#include "osa/matrix.hpp"
#include "osa/rng.hpp"

namespace osa {

/// Per-user, per-channel detector error rates. false_alarm(k, n) is the
/// probability user k senses an idle channel n as busy; miss_detection(k, n)
/// the probability a busy channel is sensed as idle.
class SensorProfile {
 public:
  /// Both matrices must be K x N with entries in [0, 1].
  SensorProfile(Matrix false_alarm, Matrix miss_detection);

  /// Scalar rates broadcast to every (user, channel) pair.
  static SensorProfile uniform(int users, int channels, double false_alarm, double miss_detection);

  int users() const { return static_cast<int>(false_alarm_.rows()); }
  int channels() const { return static_cast<int>(false_alarm_.cols()); }

  double false_alarm(int user, int channel) const;
  double miss_detection(int user, int channel) const;

 private:
  Matrix false_alarm_;
  Matrix miss_detection_;
};

/// Detector outcome for user k on channel n given the true state
/// (1 = idle, 0 = busy). Returns 1 = sensed free, 0 = sensed busy, consuming
/// exactly one draw from the user's sensor stream.
int sense(const SensorProfile& profile, int user, int channel, int true_state, RandomStream& stream);

/// Transmission acknowledgment: 1 only when the channel was idle and the user
/// sensed it free (a false alarm forfeits the slot, a miss-detected access
/// interferes with the primary user and fails).
inline int access_reward(int true_state, int observation) { return true_state * observation; }

/// Expected per-slot reward (1 - epsilon) * mu; the quality weight used by the
/// coordinator.
inline double expected_reward(double mu, double epsilon) { return (1.0 - epsilon) * mu; }

}  // namespace osa

#endif  // OSA_SENSING_HPP
