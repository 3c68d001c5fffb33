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

#ifndef OSA_SCENARIO_HPP
#define OSA_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osa/matrix.hpp"
#include "osa/policy.hpp"

namespace osa {

/// A declarative experiment: the environment (either availabilities plus
/// detector errors, or a direct quality matrix), the policy, and the batch
/// parameters. Built-in presets cover the bundled experiments; arbitrary
/// scenarios load from JSON files.
struct ScenarioConfig {
  std::string name = "custom";
  int channels = 0;
  int users = 0;

  // Physical mode: availability + sensing. Direct mode: lambda. Exactly one.
  std::optional<std::vector<double>> availability;
  std::optional<Matrix> false_alarm;      // K x N
  std::optional<Matrix> miss_detection;   // K x N
  std::optional<Matrix> lambda;           // K x N

  PolicyConfig policy;
  std::uint64_t horizon = 100000;
  int runs = 30;
  std::uint64_t base_seed = 1;
  std::uint64_t stride = 100;
  int packet_bytes = 1000;
  std::string out_path;

  bool direct_mode() const { return lambda.has_value(); }
  Environment make_environment() const;
  Matrix true_quality_matrix() const;
  bool symmetric() const;

  /// Re-checks every invariant (dimensions, probability ranges, policy
  /// pairing) and returns the non-fatal advisories. Throws
  /// std::invalid_argument naming the offending field on hard errors.
  std::vector<std::string> validate() const;
};

/// Names of the compiled-in presets: scenario1, scenario2,
/// throughput-c1 .. throughput-c4.
std::vector<std::string> preset_names();

/// Throws std::invalid_argument for unknown names.
ScenarioConfig preset_scenario(const std::string& name);

/// Loads a preset by name, or a JSON scenario file by path. Schema errors
/// carry the JSON field path.
ScenarioConfig load_scenario(const std::string& name_or_path);

/// Parses a scenario from JSON text (the file loader's core, exposed for
/// tests and embedding).
ScenarioConfig parse_scenario(const std::string& json_text);

}  // namespace osa

#endif  // OSA_SCENARIO_HPP
