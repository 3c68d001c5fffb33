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

#include "osa/policy.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include <stdexcept>

#include "doctest.h"
#include "osa/primary_network.hpp"

using namespace osa;

namespace {

Matrix symmetric_lambda(int users) {
  Matrix lambda(static_cast<std::size_t>(users), 10);
  const std::vector<double> row{0.1, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  for (int k = 0; k < users; ++k) lambda.set_row(static_cast<std::size_t>(k), row);
  return lambda;
}

PolicyConfig cc_ucb1_config(Coordination coordination, int r_period, double alpha = 1.1) {
  PolicyConfig cfg;
  cfg.kind = PolicyKind::kCcUcb1;
  cfg.coordination = coordination;
  cfg.r_period = r_period;
  cfg.alpha = alpha;
  return cfg;
}

// Reference single-user UCB1: sentinel-forced exploration (lowest channel
// first), then argmax of mean + sqrt(alpha ln t / T) with ties toward the
// lowest channel. Kept free of the library's solver machinery on purpose.
struct SingleUserReference {
  explicit SingleUserReference(int channels, double alpha)
      : alpha(alpha), pulls(static_cast<std::size_t>(channels), 0),
        sums(static_cast<std::size_t>(channels), 0.0) {}

  int choose(std::uint64_t t) const {
    for (std::size_t n = 0; n < pulls.size(); ++n) {
      if (pulls[n] == 0) return static_cast<int>(n);
    }
    const double log_t = std::log(static_cast<double>(t < 1 ? 1 : t));
    int best = 0;
    double best_index = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < pulls.size(); ++n) {
      const double index = sums[n] / static_cast<double>(pulls[n]) +
                           std::sqrt(alpha * log_t / static_cast<double>(pulls[n]));
      if (index > best_index) {
        best_index = index;
        best = static_cast<int>(n);
      }
    }
    return best;
  }

  void update(int channel, double reward) {
    pulls[static_cast<std::size_t>(channel)] += 1;
    sums[static_cast<std::size_t>(channel)] += reward;
  }

  double alpha;
  std::vector<std::uint64_t> pulls;
  std::vector<double> sums;
};

}  // namespace

TEST_CASE("single user on a dead-or-alive pair: engine equals the hand simulation") {
  // mu = (1, 0), perfect sensing: the whole trajectory is deterministic.
  Environment env = OsaChannels{PrimaryNetwork({1.0, 0.0}),
                                SensorProfile::uniform(1, 2, 0.0, 0.0)};
  SecondaryNetworkEngine engine(env, cc_ucb1_config(Coordination::kHungarian, 1), 7);

  SingleUserReference reference(2, 1.1);
  int engine_total = 0;
  int reference_total = 0;
  int dead_channel_visits = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const int expected_channel = reference.choose(t);
    const SlotOutcome outcome = engine.step();
    REQUIRE(outcome.users[0].channel == expected_channel);
    const int reward = expected_channel == 0 ? 1 : 0;
    REQUIRE(outcome.users[0].reward == reward);
    reference.update(expected_channel, reward);
    engine_total += outcome.users[0].reward;
    reference_total += reward;
    dead_channel_visits += expected_channel == 1 ? 1 : 0;
  }
  CHECK(engine_total == reference_total);
  // UCB1 with alpha = 1.1 re-probes the dead channel a few (logarithmically
  // many) times after the forced first visit, so 100 slots lose exactly 4.
  CHECK(dead_channel_visits == 4);
  CHECK(engine_total == 96);
}

TEST_CASE("single user with stochastic channels: engine equals the reference on the same seed") {
  const std::vector<double> mu{0.35, 0.9, 0.1, 0.55, 0.7};
  const std::uint64_t seed = 4242;
  Environment env = OsaChannels{PrimaryNetwork(mu), SensorProfile::uniform(1, 5, 0.0, 0.0)};
  SecondaryNetworkEngine engine(env, cc_ucb1_config(Coordination::kHungarian, 1), seed);

  // The reference consumes identical channel streams; with perfect sensing
  // the reward is the channel state itself.
  PrimaryNetwork net(mu);
  RunStreams streams(seed, 5, 1);
  SingleUserReference reference(5, 1.1);
  for (std::uint64_t t = 0; t < 5000; ++t) {
    const int expected_channel = reference.choose(t);
    const SlotState state = sample_slot(net, streams, t);
    const SlotOutcome outcome = engine.step();
    REQUIRE(outcome.users[0].channel == expected_channel);
    REQUIRE(outcome.users[0].reward == state.states[static_cast<std::size_t>(expected_channel)]);
    reference.update(expected_channel,
                     state.states[static_cast<std::size_t>(expected_channel)]);
  }
}

TEST_CASE("coordinated policies never collide") {
  for (const Coordination coordination : {Coordination::kRoundRobin, Coordination::kHungarian}) {
    Environment env = DirectQuality{symmetric_lambda(3)};
    SecondaryNetworkEngine engine(env, cc_ucb1_config(coordination, 3), 11);
    for (int t = 0; t < 2000; ++t) {
      const SlotOutcome outcome = engine.step();
      std::set<int> channels;
      for (const auto& user : outcome.users) {
        channels.insert(user.channel);
        CHECK(user.su_collision == 0);
      }
      CHECK(channels.size() == 3);
    }
  }
}

TEST_CASE("held blocks cycle every user through the block's channel set") {
  for (const Coordination coordination : {Coordination::kRoundRobin, Coordination::kHungarian}) {
    Environment env = DirectQuality{symmetric_lambda(3)};
    SecondaryNetworkEngine engine(env, cc_ucb1_config(coordination, 3), 19);
    for (int block = 0; block < 400; ++block) {
      std::vector<std::multiset<int>> per_user(3);
      std::set<int> block_set;
      for (int p = 0; p < 3; ++p) {
        const SlotOutcome outcome = engine.step();
        for (int k = 0; k < 3; ++k) {
          per_user[static_cast<std::size_t>(k)].insert(
              outcome.users[static_cast<std::size_t>(k)].channel);
          block_set.insert(outcome.users[static_cast<std::size_t>(k)].channel);
        }
      }
      REQUIRE(block_set.size() == 3);
      const std::multiset<int> expected(block_set.begin(), block_set.end());
      for (const auto& visited : per_user) CHECK(visited == expected);
    }
  }
}

TEST_CASE("exploration sentinels get every channel K pulls within ceil(N/K) rounds") {
  for (const Coordination coordination : {Coordination::kRoundRobin, Coordination::kHungarian}) {
    Environment env = DirectQuality{symmetric_lambda(3)};
    SecondaryNetworkEngine engine(env, cc_ucb1_config(coordination, 3), 23);
    const int blocks = 4;  // ceil(10 / 3)
    for (int t = 0; t < blocks * 3; ++t) engine.step();
    const UcbState& state = engine.learner_state();
    for (int n = 0; n < 10; ++n) {
      CHECK(state.pulls(0, n) >= 3);
    }
  }
}

TEST_CASE("reward sharing folds K samples per channel per round into the common row") {
  Environment env = DirectQuality{symmetric_lambda(3)};
  SecondaryNetworkEngine engine(env, cc_ucb1_config(Coordination::kRoundRobin, 3), 5);
  std::vector<std::uint64_t> before(10, 0);
  for (int block = 0; block < 100; ++block) {
    for (int p = 0; p < 3; ++p) engine.step();
    const UcbState& state = engine.learner_state();
    REQUIRE(state.learners() == 1);
    int touched = 0;
    std::uint64_t total = 0;
    for (int n = 0; n < 10; ++n) {
      const std::uint64_t delta = state.pulls(0, n) - before[static_cast<std::size_t>(n)];
      CHECK((delta == 0 || delta == 3));
      touched += delta == 3 ? 1 : 0;
      before[static_cast<std::size_t>(n)] = state.pulls(0, n);
      total += state.pulls(0, n);
    }
    CHECK(touched == 3);
    CHECK(total == static_cast<std::uint64_t>(block + 1) * 9);
  }
}

TEST_CASE("individual learning keeps per-user rows") {
  Environment env = DirectQuality{symmetric_lambda(3)};
  SecondaryNetworkEngine engine(env, cc_ucb1_config(Coordination::kHungarian, 1), 5);
  const int slots = 300;
  for (int t = 0; t < slots; ++t) engine.step();
  const UcbState& state = engine.learner_state();
  REQUIRE(state.learners() == 3);
  for (int k = 0; k < 3; ++k) {
    std::uint64_t row_total = 0;
    for (int n = 0; n < 10; ++n) row_total += state.pulls(k, n);
    CHECK(row_total == static_cast<std::uint64_t>(slots));
  }
}

TEST_CASE("two random users on two channels collide half the time") {
  PolicyConfig cfg;
  cfg.kind = PolicyKind::kRandom;
  cfg.r_period = 1;
  Environment env = DirectQuality{Matrix(2, 2, 1.0)};  // success certain when alone
  SecondaryNetworkEngine engine(env, cfg, 21);
  const int slots = 100000;
  int collisions = 0;
  for (int t = 0; t < slots; ++t) {
    const SlotOutcome outcome = engine.step();
    if (outcome.users[0].su_collision) {
      CHECK(outcome.users[0].channel == outcome.users[1].channel);
      CHECK(outcome.users[0].reward == 0);
      CHECK(outcome.users[1].reward == 0);
      ++collisions;
    }
  }
  const double rate = static_cast<double>(collisions) / slots;
  CHECK(std::abs(rate - 0.5) <= 4.0 * std::sqrt(0.25 / slots));
}

TEST_CASE("baseline selection probabilities") {
  const std::vector<double> probs =
      selection_probabilities({1.2, 0.4}, SelectionRule::kPaperLiteral);
  // 1 - 1.2 clamps to the 1e-6 floor, 1 - 0.4 = 0.6.
  CHECK(probs[0] == doctest::Approx(1e-6 / 0.600001).epsilon(1e-9));
  CHECK(probs[1] == doctest::Approx(0.6 / 0.600001).epsilon(1e-9));
  CHECK(probs[0] + probs[1] == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> prop =
      selection_probabilities({1.2, 0.4}, SelectionRule::kProportionalToIndex);
  CHECK(prop[0] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(prop[1] == doctest::Approx(0.25).epsilon(1e-12));

  // Degenerate all-zero weights fall back to uniform.
  const std::vector<double> uniform =
      selection_probabilities({0.0, 0.0, 0.0}, SelectionRule::kProportionalToIndex);
  CHECK(uniform == std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3});
}

TEST_CASE("the literal selection rule runs end to end and still explores") {
  PolicyConfig cfg;
  cfg.kind = PolicyKind::kIndividualUcb;
  cfg.r_period = 1;
  cfg.selection_rule = SelectionRule::kPaperLiteral;
  Environment env = DirectQuality{symmetric_lambda(2)};
  SecondaryNetworkEngine engine(env, cfg, 91);
  const int slots = 20000;
  for (int t = 0; t < slots; ++t) engine.step();
  const UcbState& state = engine.learner_state();
  for (int k = 0; k < 2; ++k) {
    std::uint64_t total = 0;
    for (int n = 0; n < 10; ++n) {
      CHECK(state.pulls(k, n) >= 1);  // forced first visit, floor weight after
      total += state.pulls(k, n);
    }
    CHECK(total == static_cast<std::uint64_t>(slots));
  }
}

TEST_CASE("slot outcome invariants hold for every policy kind") {
  for (const PolicyKind kind : {PolicyKind::kRandom, PolicyKind::kIndividualUcb,
                                PolicyKind::kCooperativeUcbNoCoord, PolicyKind::kCcUcb1}) {
    PolicyConfig cfg;
    cfg.kind = kind;
    cfg.coordination = Coordination::kRoundRobin;
    cfg.r_period = kind == PolicyKind::kCcUcb1 ? 4 : 1;
    Environment env = OsaChannels{
        PrimaryNetwork({0.1, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}),
        SensorProfile::uniform(4, 10, 0.2, 0.2)};
    SecondaryNetworkEngine engine(env, cfg, 33);
    for (int t = 0; t < 5000; ++t) {
      const SlotOutcome outcome = engine.step();
      std::vector<int> transmitters(10, 0);
      for (const auto& user : outcome.users) {
        if (user.transmitted) transmitters[static_cast<std::size_t>(user.channel)] += 1;
      }
      for (const auto& user : outcome.users) {
        if (user.reward == 1) {
          CHECK(user.transmitted == 1);
          CHECK(user.su_collision == 0);
          CHECK(user.pu_interference == 0);
        }
        if (user.su_collision) {
          CHECK(transmitters[static_cast<std::size_t>(user.channel)] >= 2);
          CHECK(user.reward == 0);
        }
        if (user.pu_interference) CHECK(user.reward == 0);
        CHECK(user.observation == user.transmitted);
      }
    }
  }
}

TEST_CASE("miss detections show up as primary-user interference at rate (1 - mu) delta") {
  PolicyConfig cfg = cc_ucb1_config(Coordination::kHungarian, 1);
  Environment env = OsaChannels{PrimaryNetwork({0.3}), SensorProfile::uniform(1, 1, 0.0, 0.4)};
  SecondaryNetworkEngine engine(env, cfg, 55);
  const int slots = 100000;
  int interference = 0;
  for (int t = 0; t < slots; ++t) interference += engine.step().users[0].pu_interference;
  const double rate = static_cast<double>(interference) / slots;
  const double expected = 0.7 * 0.4;
  CHECK(std::abs(rate - expected) <= 4.0 * std::sqrt(expected * (1.0 - expected) / slots));
}

TEST_CASE("cooperative baseline pools every reward into one row") {
  PolicyConfig cfg;
  cfg.kind = PolicyKind::kCooperativeUcbNoCoord;
  cfg.r_period = 1;
  Environment env = DirectQuality{symmetric_lambda(3)};
  SecondaryNetworkEngine engine(env, cfg, 61);
  const int slots = 500;
  for (int t = 0; t < slots; ++t) engine.step();
  const UcbState& state = engine.learner_state();
  REQUIRE(state.learners() == 1);
  std::uint64_t total = 0;
  for (int n = 0; n < 10; ++n) total += state.pulls(0, n);
  CHECK(total == static_cast<std::uint64_t>(slots) * 3);
}

TEST_CASE("policy validation") {
  CHECK_THROWS_AS(SecondaryNetworkEngine::validate(
                      cc_ucb1_config(Coordination::kRoundRobin, 1), 3, 10, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(SecondaryNetworkEngine::validate(
                      cc_ucb1_config(Coordination::kHungarian, 2), 3, 10, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(SecondaryNetworkEngine::validate(
                      cc_ucb1_config(Coordination::kHungarian, 1, 0.0), 3, 10, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(SecondaryNetworkEngine::validate(
                      cc_ucb1_config(Coordination::kHungarian, 1), 5, 3, true),
                  std::invalid_argument);

  const auto low_alpha = SecondaryNetworkEngine::validate(
      cc_ucb1_config(Coordination::kRoundRobin, 3, 0.9), 3, 10, true);
  REQUIRE(low_alpha.size() == 1);
  CHECK(low_alpha[0].find("alpha <= 1") != std::string::npos);

  const auto asymmetric = SecondaryNetworkEngine::validate(
      cc_ucb1_config(Coordination::kHungarian, 1, 1.1), 3, 10, false);
  REQUIRE(asymmetric.size() == 1);
  CHECK(asymmetric[0].find("alpha < K") != std::string::npos);

  CHECK(SecondaryNetworkEngine::validate(cc_ucb1_config(Coordination::kRoundRobin, 3, 1.1), 3,
                                         10, true)
            .empty());
}

TEST_CASE("as many users as channels yields a permutation every slot") {
  Matrix lambda(3, 3);
  for (int k = 0; k < 3; ++k) lambda.set_row(static_cast<std::size_t>(k), {0.2, 0.5, 0.8});
  Environment env = DirectQuality{lambda};
  SecondaryNetworkEngine engine(env, cc_ucb1_config(Coordination::kHungarian, 3), 13);
  for (int t = 0; t < 600; ++t) {
    const SlotOutcome outcome = engine.step();
    std::set<int> channels;
    for (const auto& user : outcome.users) channels.insert(user.channel);
    CHECK(channels == std::set<int>{0, 1, 2});
  }
}

TEST_CASE("same seed reproduces the full outcome sequence") {
  Environment env = DirectQuality{symmetric_lambda(3)};
  SecondaryNetworkEngine a(env, cc_ucb1_config(Coordination::kRoundRobin, 3), 77);
  SecondaryNetworkEngine b(env, cc_ucb1_config(Coordination::kRoundRobin, 3), 77);
  for (int t = 0; t < 1000; ++t) {
    const SlotOutcome oa = a.step();
    const SlotOutcome ob = b.step();
    for (int k = 0; k < 3; ++k) {
      CHECK(oa.users[static_cast<std::size_t>(k)].channel ==
            ob.users[static_cast<std::size_t>(k)].channel);
      CHECK(oa.users[static_cast<std::size_t>(k)].reward ==
            ob.users[static_cast<std::size_t>(k)].reward);
    }
  }
}
