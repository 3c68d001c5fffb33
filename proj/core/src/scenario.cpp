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

#include "osa/scenario.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace osa {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw std::invalid_argument(path + ": " + message);
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::int64_t as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

// Range check before any unsigned cast, so negative values fail loudly
// instead of wrapping.
std::int64_t as_bounded_integer(const json& j, const std::string& path, std::int64_t min,
                                std::int64_t max) {
  const std::int64_t v = as_integer(j, path);
  if (v < min || v > max) {
    fail(path, "must be in [" + std::to_string(min) + ", " + std::to_string(max) + "]");
  }
  return v;
}

std::vector<double> as_number_row(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> row;
  row.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    row.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return row;
}

// Scalar -> K x N broadcast; single row -> replicated K times; K rows -> as is.
Matrix as_probability_matrix(const json& j, const std::string& path, int users, int channels) {
  if (j.is_number()) {
    return Matrix(static_cast<std::size_t>(users), static_cast<std::size_t>(channels),
                  j.get<double>());
  }
  if (!j.is_array() || j.empty()) fail(path, "expected a number, a row, or a matrix");
  Matrix m(static_cast<std::size_t>(users), static_cast<std::size_t>(channels));
  if (j[0].is_number()) {
    const std::vector<double> row = as_number_row(j, path);
    if (static_cast<int>(row.size()) != channels) {
      fail(path, "row length " + std::to_string(row.size()) + " != channels " +
                     std::to_string(channels));
    }
    for (int k = 0; k < users; ++k) m.set_row(static_cast<std::size_t>(k), row);
    return m;
  }
  if (static_cast<int>(j.size()) != users) {
    fail(path, "expected " + std::to_string(users) + " rows, got " + std::to_string(j.size()));
  }
  for (int k = 0; k < users; ++k) {
    const std::string row_path = path + "[" + std::to_string(k) + "]";
    const std::vector<double> row = as_number_row(j[static_cast<std::size_t>(k)], row_path);
    if (static_cast<int>(row.size()) != channels) {
      fail(row_path, "row length " + std::to_string(row.size()) + " != channels " +
                         std::to_string(channels));
    }
    m.set_row(static_cast<std::size_t>(k), row);
  }
  return m;
}

void check_probabilities(const Matrix& m, const std::string& path) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!(m(r, c) >= 0.0 && m(r, c) <= 1.0)) {
        fail(path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]",
             "probability outside [0, 1]");
      }
    }
  }
}

PolicyKind parse_kind(const std::string& s, const std::string& path) {
  try {
    return policy_kind_from_string(s);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Coordination parse_coordination(const std::string& s, const std::string& path) {
  try {
    return coordination_from_string(s);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

SelectionRule parse_selection_rule(const std::string& s, const std::string& path) {
  try {
    return selection_rule_from_string(s);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

const std::vector<double>& symmetric_qualities() {
  static const std::vector<double> q{0.1, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  return q;
}

ScenarioConfig make_scenario1() {
  ScenarioConfig cfg;
  cfg.name = "scenario1";
  cfg.channels = 10;
  cfg.users = 3;
  Matrix lambda(3, 10);
  for (int k = 0; k < 3; ++k) lambda.set_row(static_cast<std::size_t>(k), symmetric_qualities());
  cfg.lambda = lambda;
  cfg.policy.kind = PolicyKind::kCcUcb1;
  cfg.policy.coordination = Coordination::kRoundRobin;
  cfg.policy.r_period = 3;
  cfg.policy.alpha = 1.1;
  cfg.horizon = 100000;
  cfg.runs = 30;
  cfg.stride = 100;
  return cfg;
}

ScenarioConfig make_scenario2() {
  ScenarioConfig cfg = make_scenario1();
  cfg.name = "scenario2";
  Matrix lambda = *cfg.lambda;
  lambda.set_row(2, {0.1, 0.1, 0.2, 0.3, 0.4, 0.7, 0.9, 0.7, 0.7, 0.6});
  cfg.lambda = lambda;
  cfg.policy.coordination = Coordination::kHungarian;
  cfg.policy.r_period = 1;
  return cfg;
}

ScenarioConfig make_throughput(int variant) {
  ScenarioConfig cfg;
  cfg.name = "throughput-c" + std::to_string(variant);
  cfg.channels = 10;
  cfg.users = 4;
  cfg.availability = symmetric_qualities();
  cfg.false_alarm = Matrix(4, 10, 0.2);
  cfg.miss_detection = Matrix(4, 10, 0.2);
  cfg.packet_bytes = 1000;
  cfg.horizon = 20000;
  cfg.runs = 200;
  cfg.stride = 100;
  cfg.policy.alpha = 1.1;
  cfg.policy.r_period = 1;
  switch (variant) {
    case 1:
      cfg.policy.kind = PolicyKind::kRandom;
      break;
    case 2:
      cfg.policy.kind = PolicyKind::kIndividualUcb;
      break;
    case 3:
      cfg.policy.kind = PolicyKind::kCooperativeUcbNoCoord;
      break;
    case 4:
      cfg.policy.kind = PolicyKind::kCcUcb1;
      cfg.policy.coordination = Coordination::kRoundRobin;
      cfg.policy.r_period = 4;
      break;
    default:
      throw std::invalid_argument("unknown throughput variant");
  }
  return cfg;
}

}  // namespace

Environment ScenarioConfig::make_environment() const {
  if (direct_mode()) {
    return DirectQuality{*lambda};
  }
  if (!availability || !false_alarm) {
    throw std::invalid_argument(
        "availability/lambda: exactly one of availability (+ false_alarm) or lambda required");
  }
  Matrix delta = miss_detection ? *miss_detection
                                : Matrix(static_cast<std::size_t>(users),
                                         static_cast<std::size_t>(channels), 0.0);
  return OsaChannels{PrimaryNetwork(*availability), SensorProfile(*false_alarm, delta)};
}

Matrix ScenarioConfig::true_quality_matrix() const { return true_quality(make_environment()); }

bool ScenarioConfig::symmetric() const {
  const Matrix lambda_true = true_quality_matrix();
  for (std::size_t k = 1; k < lambda_true.rows(); ++k) {
    for (std::size_t n = 0; n < lambda_true.cols(); ++n) {
      if (lambda_true(k, n) != lambda_true(0, n)) return false;
    }
  }
  return true;
}

std::vector<std::string> ScenarioConfig::validate() const {
  if (channels < 1) fail("channels", "must be >= 1");
  if (users < 1) fail("users", "must be >= 1");
  if (users > channels) {
    fail("users", "K = " + std::to_string(users) + " exceeds channels N = " +
                      std::to_string(channels));
  }
  if (horizon < 1) fail("horizon", "must be >= 1");
  if (runs < 1) fail("runs", "must be >= 1");
  if (stride < 1) fail("stride", "must be >= 1");
  if (packet_bytes < 1) fail("packet_bytes", "must be >= 1");

  const bool has_physical = availability.has_value();
  if (has_physical == lambda.has_value()) {
    fail("availability/lambda", "exactly one of availability (+ false_alarm) or lambda required");
  }
  if (has_physical) {
    if (static_cast<int>(availability->size()) != channels) {
      fail("availability", "length " + std::to_string(availability->size()) + " != channels " +
                               std::to_string(channels));
    }
    for (std::size_t n = 0; n < availability->size(); ++n) {
      if (!((*availability)[n] >= 0.0 && (*availability)[n] <= 1.0)) {
        fail("availability[" + std::to_string(n) + "]", "probability outside [0, 1]");
      }
    }
    if (!false_alarm) fail("false_alarm", "required alongside availability");
    if (false_alarm->rows() != static_cast<std::size_t>(users) ||
        false_alarm->cols() != static_cast<std::size_t>(channels)) {
      fail("false_alarm", "dimensions must be K x N");
    }
    check_probabilities(*false_alarm, "false_alarm");
    if (miss_detection) {
      if (miss_detection->rows() != static_cast<std::size_t>(users) ||
          miss_detection->cols() != static_cast<std::size_t>(channels)) {
        fail("miss_detection", "dimensions must be K x N");
      }
      check_probabilities(*miss_detection, "miss_detection");
    }
  } else {
    if (lambda->rows() != static_cast<std::size_t>(users) ||
        lambda->cols() != static_cast<std::size_t>(channels)) {
      fail("lambda", "dimensions must be K x N");
    }
    check_probabilities(*lambda, "lambda");
  }

  return SecondaryNetworkEngine::validate(policy, users, channels, symmetric());
}

std::vector<std::string> preset_names() {
  return {"scenario1",      "scenario2",      "throughput-c1", "throughput-c2",
          "throughput-c3",  "throughput-c4"};
}

ScenarioConfig preset_scenario(const std::string& name) {
  if (name == "scenario1") return make_scenario1();
  if (name == "scenario2") return make_scenario2();
  for (int variant = 1; variant <= 4; ++variant) {
    if (name == "throughput-c" + std::to_string(variant)) return make_throughput(variant);
  }
  throw std::invalid_argument("unknown preset scenario '" + name + "'");
}

ScenarioConfig parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("scenario: top level must be an object");

  ScenarioConfig cfg;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("name", "expected a string");
    cfg.name = j["name"].get<std::string>();
  }
  if (!j.contains("channels")) fail("channels", "missing");
  cfg.channels = static_cast<int>(as_bounded_integer(j["channels"], "channels", 1, 30000));
  if (!j.contains("users")) fail("users", "missing");
  cfg.users = static_cast<int>(as_bounded_integer(j["users"], "users", 1, 30000));

  if (j.contains("availability")) {
    cfg.availability = as_number_row(j["availability"], "availability");
  }
  if (j.contains("false_alarm")) {
    cfg.false_alarm = as_probability_matrix(j["false_alarm"], "false_alarm", cfg.users,
                                            cfg.channels);
  }
  if (j.contains("miss_detection")) {
    cfg.miss_detection = as_probability_matrix(j["miss_detection"], "miss_detection", cfg.users,
                                               cfg.channels);
  }
  if (j.contains("lambda")) {
    cfg.lambda = as_probability_matrix(j["lambda"], "lambda", cfg.users, cfg.channels);
  }

  int r_period = 0;  // 0 = derive from coordination/symmetry below
  if (j.contains("policy")) {
    const json& p = j["policy"];
    if (!p.is_object()) fail("policy", "expected an object");
    if (p.contains("kind")) {
      if (!p["kind"].is_string()) fail("policy.kind", "expected a string");
      cfg.policy.kind = parse_kind(p["kind"].get<std::string>(), "policy.kind");
    }
    if (p.contains("coordination")) {
      if (!p["coordination"].is_string()) fail("policy.coordination", "expected a string");
      cfg.policy.coordination =
          parse_coordination(p["coordination"].get<std::string>(), "policy.coordination");
    }
    if (p.contains("alpha")) cfg.policy.alpha = as_number(p["alpha"], "policy.alpha");
    if (p.contains("selection_rule")) {
      if (!p["selection_rule"].is_string()) fail("policy.selection_rule", "expected a string");
      cfg.policy.selection_rule =
          parse_selection_rule(p["selection_rule"].get<std::string>(), "policy.selection_rule");
    }
    if (p.contains("r_period")) {
      if (p["r_period"].is_string()) {
        const std::string s = p["r_period"].get<std::string>();
        if (s != "K" && s != "k") fail("policy.r_period", "expected 1, K, or the string \"K\"");
        r_period = cfg.users;
      } else {
        r_period = static_cast<int>(as_bounded_integer(p["r_period"], "policy.r_period", 1, 30000));
      }
    }
  }

  if (j.contains("horizon")) {
    cfg.horizon = static_cast<std::uint64_t>(
        as_bounded_integer(j["horizon"], "horizon", 1, 1000000000000LL));
  }
  if (j.contains("runs")) {
    cfg.runs = static_cast<int>(as_bounded_integer(j["runs"], "runs", 1, 1000000));
  }
  if (j.contains("seed")) cfg.base_seed = static_cast<std::uint64_t>(as_integer(j["seed"], "seed"));
  if (j.contains("stride")) {
    cfg.stride = static_cast<std::uint64_t>(
        as_bounded_integer(j["stride"], "stride", 1, 1000000000000LL));
  }
  if (j.contains("packet_bytes")) {
    cfg.packet_bytes =
        static_cast<int>(as_bounded_integer(j["packet_bytes"], "packet_bytes", 1, 1000000000));
  }
  if (j.contains("out")) {
    if (!j["out"].is_string()) fail("out", "expected a string");
    cfg.out_path = j["out"].get<std::string>();
  }

  if (r_period != 0) {
    cfg.policy.r_period = r_period;
  } else if (cfg.policy.kind == PolicyKind::kCcUcb1) {
    // Default R: share every K slots in homogeneous networks, relearn per
    // slot otherwise.
    bool homogeneous = cfg.policy.coordination == Coordination::kRoundRobin;
    if (!homogeneous) {
      try {
        homogeneous = cfg.symmetric();
      } catch (const std::exception&) {
        homogeneous = false;  // broken env fields; validate() reports them
      }
    }
    cfg.policy.r_period = homogeneous ? cfg.users : 1;
  } else {
    cfg.policy.r_period = 1;
  }

  cfg.validate();
  return cfg;
}

ScenarioConfig load_scenario(const std::string& name_or_path) {
  for (const std::string& name : preset_names()) {
    if (name == name_or_path) return preset_scenario(name);
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw std::invalid_argument("scenario '" + name_or_path +
                                "' is neither a preset name nor a readable file");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str());
}

}  // namespace osa
