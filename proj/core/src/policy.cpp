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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace osa {

namespace {

constexpr double kLiteralWeightFloor = 1e-6;

LearnerMode learner_mode_for(const PolicyConfig& cfg, int users) {
  switch (cfg.kind) {
    case PolicyKind::kCcUcb1:
      return cfg.r_period == users ? LearnerMode::kShared : LearnerMode::kIndividual;
    case PolicyKind::kCooperativeUcbNoCoord:
      return LearnerMode::kShared;
    case PolicyKind::kRandom:
    case PolicyKind::kIndividualUcb:
      return LearnerMode::kIndividual;
  }
  return LearnerMode::kIndividual;
}

}  // namespace

const char* to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kCcUcb1: return "cc_ucb1";
    case PolicyKind::kRandom: return "random";
    case PolicyKind::kIndividualUcb: return "individual_ucb";
    case PolicyKind::kCooperativeUcbNoCoord: return "cooperative_ucb_nocoord";
  }
  return "?";
}

const char* to_string(Coordination coordination) {
  switch (coordination) {
    case Coordination::kHungarian: return "hungarian";
    case Coordination::kRoundRobin: return "round_robin";
  }
  return "?";
}

const char* to_string(SelectionRule rule) {
  switch (rule) {
    case SelectionRule::kPaperLiteral: return "paper_literal";
    case SelectionRule::kProportionalToIndex: return "proportional_to_index";
  }
  return "?";
}

PolicyKind policy_kind_from_string(const std::string& name) {
  if (name == "cc_ucb1") return PolicyKind::kCcUcb1;
  if (name == "random") return PolicyKind::kRandom;
  if (name == "individual_ucb") return PolicyKind::kIndividualUcb;
  if (name == "cooperative_ucb_nocoord") return PolicyKind::kCooperativeUcbNoCoord;
  throw std::invalid_argument("unknown policy kind '" + name +
                              "' (want cc_ucb1 | random | individual_ucb | "
                              "cooperative_ucb_nocoord)");
}

Coordination coordination_from_string(const std::string& name) {
  if (name == "hungarian") return Coordination::kHungarian;
  if (name == "round_robin") return Coordination::kRoundRobin;
  throw std::invalid_argument("unknown coordination '" + name +
                              "' (want hungarian | round_robin)");
}

SelectionRule selection_rule_from_string(const std::string& name) {
  if (name == "paper_literal") return SelectionRule::kPaperLiteral;
  if (name == "proportional_to_index") return SelectionRule::kProportionalToIndex;
  throw std::invalid_argument("unknown selection rule '" + name +
                              "' (want paper_literal | proportional_to_index)");
}

int environment_users(const Environment& env) {
  if (const auto* osa_env = std::get_if<OsaChannels>(&env)) {
    return osa_env->sensors.users();
  }
  return static_cast<int>(std::get<DirectQuality>(env).lambda.rows());
}

int environment_channels(const Environment& env) {
  if (const auto* osa_env = std::get_if<OsaChannels>(&env)) {
    return osa_env->network.channels();
  }
  return static_cast<int>(std::get<DirectQuality>(env).lambda.cols());
}

Matrix true_quality(const Environment& env) {
  if (const auto* direct = std::get_if<DirectQuality>(&env)) {
    return direct->lambda;
  }
  const auto& osa_env = std::get<OsaChannels>(env);
  const int users = osa_env.sensors.users();
  const int channels = osa_env.network.channels();
  Matrix lambda(static_cast<std::size_t>(users), static_cast<std::size_t>(channels));
  for (int k = 0; k < users; ++k) {
    for (int n = 0; n < channels; ++n) {
      lambda(static_cast<std::size_t>(k), static_cast<std::size_t>(n)) =
          expected_reward(osa_env.network.availability()[static_cast<std::size_t>(n)],
                          osa_env.sensors.false_alarm(k, n));
    }
  }
  return lambda;
}

std::vector<double> selection_probabilities(const std::vector<double>& indices,
                                            SelectionRule rule) {
  std::vector<double> weights(indices.size());
  for (std::size_t n = 0; n < indices.size(); ++n) {
    if (rule == SelectionRule::kPaperLiteral) {
      weights[n] = std::max(1.0 - indices[n], kLiteralWeightFloor);
    } else {
      weights[n] = std::max(indices[n], 0.0);
    }
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0) || !std::isfinite(total)) {
    return std::vector<double>(indices.size(), 1.0 / static_cast<double>(indices.size()));
  }
  for (double& w : weights) w /= total;
  return weights;
}

std::vector<std::string> SecondaryNetworkEngine::validate(const PolicyConfig& cfg, int users,
                                                          int channels, bool symmetric_quality) {
  if (users < 1) throw std::invalid_argument("policy: need at least one user");
  if (users > channels) throw std::invalid_argument("policy: more users than channels");
  if (!(cfg.alpha > 0.0)) throw std::invalid_argument("policy: alpha must be positive");
  if (cfg.r_period != 1 && cfg.r_period != users) {
    throw std::invalid_argument("policy: r_period must be 1 or K");
  }
  if (cfg.kind == PolicyKind::kCcUcb1 && cfg.coordination == Coordination::kRoundRobin &&
      cfg.r_period != users) {
    throw std::invalid_argument("policy: round_robin coordination requires r_period = K");
  }
  std::vector<std::string> warnings;
  if (cfg.kind == PolicyKind::kCcUcb1 && cfg.alpha <= 1.0) {
    warnings.push_back("alpha <= 1: the logarithmic regret guarantee assumes alpha > 1");
  }
  if (cfg.kind == PolicyKind::kCcUcb1 && !symmetric_quality &&
      cfg.alpha < static_cast<double>(users)) {
    warnings.push_back(
        "alpha < K on a non-symmetric network: known order-optimality results assume alpha >= K");
  }
  return warnings;
}

SecondaryNetworkEngine::SecondaryNetworkEngine(Environment env, PolicyConfig cfg,
                                               std::uint64_t seed)
    : env_(std::move(env)),
      cfg_(cfg),
      users_(environment_users(env_)),
      channels_(environment_channels(env_)),
      state_(learner_mode_for(cfg, users_), users_, channels_, cfg.alpha),
      streams_(seed, channels_, users_) {
  bool symmetric = true;
  const Matrix lambda = true_quality(env_);
  for (std::size_t k = 1; k < lambda.rows() && symmetric; ++k) {
    for (std::size_t n = 0; n < lambda.cols(); ++n) {
      if (lambda(k, n) != lambda(0, n)) {
        symmetric = false;
        break;
      }
    }
  }
  validate(cfg_, users_, channels_, symmetric);
  block_channels_.assign(static_cast<std::size_t>(users_), 0);
}

void SecondaryNetworkEngine::start_block(std::uint64_t t) {
  if (cfg_.coordination == Coordination::kHungarian) {
    const Assignment assignment = rotate_then_solve(state_.learner_matrix(t), t);
    block_channels_ = assignment.channel_of;
    return;
  }
  // Round-Robin: rank the K channels with the highest common index, ties by
  // lowest channel number. Sharing is required here, so row 0 is the common
  // learner row.
  std::vector<int> order(static_cast<std::size_t>(channels_));
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> common(static_cast<std::size_t>(channels_));
  for (int n = 0; n < channels_; ++n) {
    common[static_cast<std::size_t>(n)] = state_.index(0, n, t);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const double ia = common[static_cast<std::size_t>(a)];
    const double ib = common[static_cast<std::size_t>(b)];
    if (ia != ib) return ia > ib;
    return a < b;
  });
  block_channels_.assign(order.begin(), order.begin() + users_);
}

int SecondaryNetworkEngine::probabilistic_choice(int user, std::uint64_t t) {
  const int row = state_.learner_of(user);
  std::vector<int> unexplored;
  for (int n = 0; n < channels_; ++n) {
    if (state_.pulls(row, n) == 0) unexplored.push_back(n);
  }
  if (!unexplored.empty()) {
    return unexplored[streams_.selection(user).uniform_below(
        static_cast<std::uint32_t>(unexplored.size()))];
  }
  std::vector<double> indices(static_cast<std::size_t>(channels_));
  for (int n = 0; n < channels_; ++n) {
    indices[static_cast<std::size_t>(n)] = state_.index(row, n, t);
  }
  const std::vector<double> probs = selection_probabilities(indices, cfg_.selection_rule);
  const double u = streams_.selection(user).uniform01();
  double cumulative = 0.0;
  for (int n = 0; n < channels_; ++n) {
    cumulative += probs[static_cast<std::size_t>(n)];
    if (u < cumulative) return n;
  }
  return channels_ - 1;
}

std::vector<int> SecondaryNetworkEngine::choose_channels(std::uint64_t t) {
  std::vector<int> chosen(static_cast<std::size_t>(users_), -1);
  switch (cfg_.kind) {
    case PolicyKind::kCcUcb1: {
      const auto period = static_cast<std::uint64_t>(cfg_.r_period);
      if (t % period == 0) start_block(t);
      for (int k = 0; k < users_; ++k) {
        chosen[static_cast<std::size_t>(k)] =
            cfg_.r_period == 1 ? block_channels_[static_cast<std::size_t>(k)]
                               : round_robin_assign(block_channels_, k, t);
      }
      break;
    }
    case PolicyKind::kRandom:
      for (int k = 0; k < users_; ++k) {
        chosen[static_cast<std::size_t>(k)] = static_cast<int>(
            streams_.selection(k).uniform_below(static_cast<std::uint32_t>(channels_)));
      }
      break;
    case PolicyKind::kIndividualUcb:
    case PolicyKind::kCooperativeUcbNoCoord:
      for (int k = 0; k < users_; ++k) {
        chosen[static_cast<std::size_t>(k)] = probabilistic_choice(k, t);
      }
      break;
  }
  return chosen;
}

SlotOutcome SecondaryNetworkEngine::step() {
  const std::uint64_t t = slot_;
  SlotOutcome outcome;
  outcome.slot = t;
  outcome.users.resize(static_cast<std::size_t>(users_));

  const std::vector<int> chosen = choose_channels(t);

  // Environment response: sensed-free users transmit.
  if (const auto* osa_env = std::get_if<OsaChannels>(&env_)) {
    const SlotState slot_state = sample_slot(osa_env->network, streams_, t);
    for (int k = 0; k < users_; ++k) {
      auto& user = outcome.users[static_cast<std::size_t>(k)];
      user.channel = chosen[static_cast<std::size_t>(k)];
      const int true_state = slot_state.states[static_cast<std::size_t>(user.channel)];
      user.observation = static_cast<std::uint8_t>(
          sense(osa_env->sensors, k, user.channel, true_state, streams_.sensor(k)));
      user.transmitted = user.observation;
      user.pu_interference = static_cast<std::uint8_t>(user.transmitted != 0 && true_state == 0);
      user.reward = static_cast<std::uint8_t>(access_reward(true_state, user.observation));
    }
  } else {
    const auto& direct = std::get<DirectQuality>(env_);
    for (int k = 0; k < users_; ++k) {
      auto& user = outcome.users[static_cast<std::size_t>(k)];
      user.channel = chosen[static_cast<std::size_t>(k)];
      const bool success = streams_.sensor(k).bernoulli(
          direct.lambda(static_cast<std::size_t>(k), static_cast<std::size_t>(user.channel)));
      user.observation = static_cast<std::uint8_t>(success);
      user.transmitted = user.observation;
      user.reward = user.observation;
    }
  }

  // A slot is lost for everyone who transmitted on a channel with another
  // secondary transmitter.
  std::vector<int> transmitters(static_cast<std::size_t>(channels_), 0);
  for (const auto& user : outcome.users) {
    if (user.transmitted) transmitters[static_cast<std::size_t>(user.channel)] += 1;
  }
  for (auto& user : outcome.users) {
    if (user.transmitted && transmitters[static_cast<std::size_t>(user.channel)] >= 2) {
      user.su_collision = 1;
      user.reward = 0;
    }
  }

  // Learning updates.
  switch (cfg_.kind) {
    case PolicyKind::kCcUcb1: {
      for (int k = 0; k < users_; ++k) {
        const auto& user = outcome.users[static_cast<std::size_t>(k)];
        pending_.push_back({k, user.channel, static_cast<double>(user.reward)});
      }
      if ((t + 1) % static_cast<std::uint64_t>(cfg_.r_period) == 0) {
        for (const auto& obs : pending_) {
          state_.record(state_.learner_of(obs.user), obs.channel, obs.reward);
        }
        pending_.clear();
      }
      break;
    }
    case PolicyKind::kIndividualUcb:
      for (int k = 0; k < users_; ++k) {
        const auto& user = outcome.users[static_cast<std::size_t>(k)];
        state_.record(k, user.channel, static_cast<double>(user.reward));
      }
      break;
    case PolicyKind::kCooperativeUcbNoCoord:
      for (int k = 0; k < users_; ++k) {
        const auto& user = outcome.users[static_cast<std::size_t>(k)];
        state_.record(0, user.channel, static_cast<double>(user.reward));
      }
      break;
    case PolicyKind::kRandom:
      break;
  }

  state_.advance_clock();
  ++slot_;
  return outcome;
}

void SecondaryNetworkEngine::finish() {
  for (const auto& obs : pending_) {
    state_.record(state_.learner_of(obs.user), obs.channel, obs.reward);
  }
  pending_.clear();
}

}  // namespace osa
