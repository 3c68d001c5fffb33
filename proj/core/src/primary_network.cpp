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

#include "osa/primary_network.hpp"

#include <stdexcept>
#include <string>

namespace osa {

PrimaryNetwork::PrimaryNetwork(std::vector<double> availability)
    : availability_(std::move(availability)) {
  if (availability_.empty()) {
    throw std::invalid_argument("PrimaryNetwork: needs at least one channel");
  }
  for (std::size_t n = 0; n < availability_.size(); ++n) {
    const double mu = availability_[n];
    if (!(mu >= 0.0 && mu <= 1.0)) {
      throw std::invalid_argument("PrimaryNetwork: availability[" + std::to_string(n) +
                                  "] = " + std::to_string(mu) + " outside [0, 1]");
    }
  }
}

SlotState sample_slot(const PrimaryNetwork& net, RunStreams& streams, std::uint64_t t) {
  SlotState state;
  state.slot = t;
  const int n_channels = net.channels();
  state.states.resize(static_cast<std::size_t>(n_channels));
  for (int n = 0; n < n_channels; ++n) {
    state.states[static_cast<std::size_t>(n)] =
        streams.channel(n).bernoulli(net.availability()[static_cast<std::size_t>(n)]) ? 1 : 0;
  }
  return state;
}

double empirical_availability(const std::vector<SlotState>& trace, int channel) {
  if (trace.empty()) {
    throw std::invalid_argument("empirical_availability: empty trace");
  }
  if (channel < 0 || static_cast<std::size_t>(channel) >= trace.front().states.size()) {
    throw std::invalid_argument("empirical_availability: bad channel");
  }
  std::uint64_t idle = 0;
  for (const SlotState& s : trace) {
    idle += s.states[static_cast<std::size_t>(channel)];
  }
  return static_cast<double>(idle) / static_cast<double>(trace.size());
}

}  // namespace osa
