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

#ifndef OSA_PRIMARY_NETWORK_HPP
#define OSA_PRIMARY_NETWORK_HPP

#include <cstdint>
#include <vector>

#include "osa/rng.hpp"

namespace osa {

/// The licensed network: N independent stationary Bernoulli channels. Channel
/// n is idle in a slot with probability availability()[n].
class PrimaryNetwork {
 public:
  /// Throws std::invalid_argument if any probability lies outside [0, 1]
  /// or the vector is empty. Out-of-range values are an error, never clamped.
  explicit PrimaryNetwork(std::vector<double> availability);

  int channels() const { return static_cast<int>(availability_.size()); }
  const std::vector<double>& availability() const { return availability_; }

 private:
  std::vector<double> availability_;
};

/// Channel states for one slot: 1 = idle, 0 = busy.
struct SlotState {
  std::uint64_t slot = 0;
  std::vector<std::uint8_t> states;
};

/// Draws the slot-t channel states. Each channel consumes exactly one draw
/// from its own sub-stream, so the realization of channel n depends only on
/// (run seed, n, how many slots were sampled before).
SlotState sample_slot(const PrimaryNetwork& net, RunStreams& streams, std::uint64_t t);

/// Mean of S_{channel,t} over the trace. Throws std::invalid_argument with
/// "empty trace" / "bad channel" on the respective misuse.
double empirical_availability(const std::vector<SlotState>& trace, int channel);

}  // namespace osa

#endif  // OSA_PRIMARY_NETWORK_HPP
