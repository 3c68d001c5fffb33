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

#ifndef OSA_POLICY_HPP
#define OSA_POLICY_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "osa/assignment.hpp"
#include "osa/matrix.hpp"
#include "osa/primary_network.hpp"
#include "osa/rng.hpp"
#include "osa/sensing.hpp"
#include "osa/ucb.hpp"

namespace osa {

enum class PolicyKind {
  kCcUcb1,                  // joint learning + coordination (C4)
  kRandom,                  // uniform channel choice, no learning (C1)
  kIndividualUcb,           // per-user UCB1, probabilistic choice, no coordination (C2)
  kCooperativeUcbNoCoord,   // shared-reward UCB1, probabilistic choice, no coordination (C3)
};

enum class Coordination { kHungarian, kRoundRobin };

/// How the no-coordination baselines turn indices into selection
/// probabilities. kPaperLiteral uses weights 1 - B clamped below at 1e-6
/// (B can exceed 1, and the rule favors low-index channels);
/// kProportionalToIndex uses weights proportional to B.
enum class SelectionRule { kPaperLiteral, kProportionalToIndex };

struct PolicyConfig {
  PolicyKind kind = PolicyKind::kCcUcb1;
  Coordination coordination = Coordination::kHungarian;
  int r_period = 1;  // 1 or K; reward sharing (one common learner row) iff K
  double alpha = 1.1;
  SelectionRule selection_rule = SelectionRule::kProportionalToIndex;
};

const char* to_string(PolicyKind kind);
const char* to_string(Coordination coordination);
const char* to_string(SelectionRule rule);

/// Inverse of to_string; throws std::invalid_argument listing the accepted
/// names.
PolicyKind policy_kind_from_string(const std::string& name);
Coordination coordination_from_string(const std::string& name);
SelectionRule selection_rule_from_string(const std::string& name);

/// Physical channel model: sampled primary states observed through imperfect
/// detectors.
struct OsaChannels {
  PrimaryNetwork network;
  SensorProfile sensors;
};

/// Abstract quality model: the outcome user k observes on channel n is a
/// direct Bernoulli(lambda(k, n)) draw, skipping the sensing layer.
struct DirectQuality {
  Matrix lambda;  // K x N
};

using Environment = std::variant<OsaChannels, DirectQuality>;

int environment_users(const Environment& env);
int environment_channels(const Environment& env);

/// The true expected per-slot reward matrix lambda(k, n): (1 - eps) * mu in
/// the physical model, the given matrix in the abstract one.
Matrix true_quality(const Environment& env);

struct UserOutcome {
  int channel = -1;
  std::uint8_t observation = 0;      // sensed free
  std::uint8_t transmitted = 0;
  std::uint8_t reward = 0;           // positive acknowledgment
  std::uint8_t su_collision = 0;     // lost to another secondary transmitter
  std::uint8_t pu_interference = 0;  // transmitted over an active primary user
};

struct SlotOutcome {
  std::uint64_t slot = 0;
  std::vector<UserOutcome> users;
};

/// Normalized selection probabilities for the C2/C3 baselines given one
/// learner's finite index row. Degenerate all-zero weights fall back to
/// uniform.
std::vector<double> selection_probabilities(const std::vector<double>& indices,
                                            SelectionRule rule);

/// Runs one secondary network for one seeded run, slot by slot.
///
/// CC-UCB1 slots follow the four-step cycle: every r_period slots the index
/// matrix is recomputed and the coordinator (rotated Hungarian or Round-Robin
/// ranking) fixes the channel list for the block; each slot every user senses
/// its channel and transmits iff sensed free; at block end all outcomes are
/// folded into the learner state (one common row when sharing, per-user rows
/// otherwise).
class SecondaryNetworkEngine {
 public:
  SecondaryNetworkEngine(Environment env, PolicyConfig cfg, std::uint64_t seed);

  /// Hard-validates a policy configuration and returns non-fatal advisories
  /// (alpha thresholds from the known regret guarantees).
  static std::vector<std::string> validate(const PolicyConfig& cfg, int users, int channels,
                                           bool symmetric_quality);

  SlotOutcome step();

  /// Folds a trailing partial coordination block into the learner state.
  void finish();

  const UcbState& learner_state() const { return state_; }
  std::uint64_t slot() const { return slot_; }
  int users() const { return users_; }
  int channels() const { return channels_; }

 private:
  void start_block(std::uint64_t t);
  std::vector<int> choose_channels(std::uint64_t t);
  int probabilistic_choice(int user, std::uint64_t t);

  Environment env_;
  PolicyConfig cfg_;
  int users_;
  int channels_;
  UcbState state_;
  RunStreams streams_;
  std::uint64_t slot_ = 0;
  std::vector<int> block_channels_;

  struct PendingObservation {
    int user;
    int channel;
    double reward;
  };
  std::vector<PendingObservation> pending_;
};

}  // namespace osa

#endif  // OSA_POLICY_HPP
