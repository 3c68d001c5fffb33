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

#include <cmath>
#include <vector>

#include <stdexcept>

#include "doctest.h"

using namespace osa;

namespace {

const std::vector<double> kScenarioAvailabilities{0.1, 0.1, 0.2, 0.3, 0.4,
                                                  0.5, 0.6, 0.7, 0.8, 0.9};

std::vector<SlotState> sample_trace(const PrimaryNetwork& net, std::uint64_t seed,
                                    std::uint64_t slots) {
  RunStreams streams(seed, net.channels(), 1);
  std::vector<SlotState> trace;
  trace.reserve(slots);
  for (std::uint64_t t = 0; t < slots; ++t) trace.push_back(sample_slot(net, streams, t));
  return trace;
}

}  // namespace

TEST_CASE("degenerate availabilities are deterministic") {
  PrimaryNetwork sure({1.0, 1.0, 1.0});
  PrimaryNetwork never({0.0, 0.0});
  RunStreams streams_a(7, 3, 1);
  RunStreams streams_b(7, 2, 1);
  for (std::uint64_t t = 0; t < 50; ++t) {
    const SlotState all_idle = sample_slot(sure, streams_a, t);
    CHECK(all_idle.states == std::vector<std::uint8_t>{1, 1, 1});
    const SlotState all_busy = sample_slot(never, streams_b, t);
    CHECK(all_busy.states == std::vector<std::uint8_t>{0, 0});
  }
}

TEST_CASE("availability outside [0, 1] is rejected at load") {
  CHECK_THROWS_AS(PrimaryNetwork({0.5, 1.2}), std::invalid_argument);
  CHECK_THROWS_AS(PrimaryNetwork({-0.1}), std::invalid_argument);
  CHECK_THROWS_AS(PrimaryNetwork({}), std::invalid_argument);
}

TEST_CASE("empirical mean of a 0.9 channel lands in the binomial band") {
  PrimaryNetwork net({0.9});
  const auto trace = sample_trace(net, 42, 100000);
  const double mean = empirical_availability(trace, 0);
  CHECK(mean >= 0.887);
  CHECK(mean <= 0.913);
}

TEST_CASE("empirical_availability arithmetic and errors") {
  SlotState idle{0, {1}};
  SlotState busy{1, {0}};
  CHECK(empirical_availability({idle, idle, idle}, 0) == 1.0);
  CHECK(empirical_availability({idle, busy, idle, busy}, 0) == 0.5);
  CHECK_THROWS_WITH_AS(empirical_availability({}, 0), "empirical_availability: empty trace",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(empirical_availability({idle}, 3), "empirical_availability: bad channel",
                       std::invalid_argument);
}

TEST_CASE("long-run frequencies converge to the availabilities") {
  PrimaryNetwork net(kScenarioAvailabilities);
  RunStreams streams(1, net.channels(), 1);
  const std::uint64_t slots = 1000000;
  std::vector<std::uint64_t> idle(kScenarioAvailabilities.size(), 0);
  for (std::uint64_t t = 0; t < slots; ++t) {
    const SlotState s = sample_slot(net, streams, t);
    for (std::size_t n = 0; n < idle.size(); ++n) idle[n] += s.states[n];
  }
  for (std::size_t n = 0; n < idle.size(); ++n) {
    const double mean = static_cast<double>(idle[n]) / static_cast<double>(slots);
    CHECK(std::abs(mean - kScenarioAvailabilities[n]) <= 0.002);
  }
}

TEST_CASE("same seed reproduces the slot sequence bit for bit") {
  PrimaryNetwork net(kScenarioAvailabilities);
  const auto a = sample_trace(net, 99, 2000);
  const auto b = sample_trace(net, 99, 2000);
  REQUIRE(a.size() == b.size());
  for (std::size_t t = 0; t < a.size(); ++t) CHECK(a[t].states == b[t].states);
  const auto c = sample_trace(net, 100, 2000);
  bool any_difference = false;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t].states != c[t].states) any_difference = true;
  }
  CHECK(any_difference);
}

TEST_CASE("channels are statistically independent") {
  PrimaryNetwork net(kScenarioAvailabilities);
  const std::uint64_t slots = 100000;
  RunStreams streams(5, net.channels(), 1);
  const std::size_t channels = kScenarioAvailabilities.size();
  std::vector<double> sum(channels, 0.0);
  std::vector<std::vector<double>> cross(channels, std::vector<double>(channels, 0.0));
  for (std::uint64_t t = 0; t < slots; ++t) {
    const SlotState s = sample_slot(net, streams, t);
    for (std::size_t i = 0; i < channels; ++i) {
      sum[i] += s.states[i];
      for (std::size_t j = i + 1; j < channels; ++j) {
        cross[i][j] += static_cast<double>(s.states[i]) * s.states[j];
      }
    }
  }
  for (std::size_t i = 0; i < channels; ++i) {
    const double mi = sum[i] / static_cast<double>(slots);
    const double vi = mi * (1.0 - mi);
    for (std::size_t j = i + 1; j < channels; ++j) {
      const double mj = sum[j] / static_cast<double>(slots);
      const double vj = mj * (1.0 - mj);
      const double cov = cross[i][j] / static_cast<double>(slots) - mi * mj;
      const double corr = cov / std::sqrt(vi * vj);
      CHECK(std::abs(corr) < 0.02);
    }
  }
}

TEST_CASE("adding users does not perturb the channel draws") {
  PrimaryNetwork net(kScenarioAvailabilities);
  RunStreams one_user(11, net.channels(), 1);
  RunStreams five_users(11, net.channels(), 5);
  for (std::uint64_t t = 0; t < 500; ++t) {
    CHECK(sample_slot(net, one_user, t).states == sample_slot(net, five_users, t).states);
  }
}
