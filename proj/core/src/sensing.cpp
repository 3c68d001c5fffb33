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

#include "osa/sensing.hpp"

#include <stdexcept>
#include <string>

namespace osa {

namespace {

void check_probability_matrix(const Matrix& m, const char* what) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const double p = m(r, c);
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string("SensorProfile: ") + what + "(" +
                                    std::to_string(r) + ", " + std::to_string(c) + ") = " +
                                    std::to_string(p) + " outside [0, 1]");
      }
    }
  }
}

}  // namespace

SensorProfile::SensorProfile(Matrix false_alarm, Matrix miss_detection)
    : false_alarm_(std::move(false_alarm)), miss_detection_(std::move(miss_detection)) {
  if (false_alarm_.rows() != miss_detection_.rows() ||
      false_alarm_.cols() != miss_detection_.cols()) {
    throw std::invalid_argument("SensorProfile: false_alarm and miss_detection dimensions differ");
  }
  if (false_alarm_.rows() == 0 || false_alarm_.cols() == 0) {
    throw std::invalid_argument("SensorProfile: empty matrices");
  }
  check_probability_matrix(false_alarm_, "false_alarm");
  check_probability_matrix(miss_detection_, "miss_detection");
}

SensorProfile SensorProfile::uniform(int users, int channels, double false_alarm,
                                     double miss_detection) {
  return SensorProfile(Matrix(static_cast<std::size_t>(users), static_cast<std::size_t>(channels),
                              false_alarm),
                       Matrix(static_cast<std::size_t>(users), static_cast<std::size_t>(channels),
                              miss_detection));
}

double SensorProfile::false_alarm(int user, int channel) const {
  return false_alarm_.at(static_cast<std::size_t>(user), static_cast<std::size_t>(channel));
}

double SensorProfile::miss_detection(int user, int channel) const {
  return miss_detection_.at(static_cast<std::size_t>(user), static_cast<std::size_t>(channel));
}

int sense(const SensorProfile& profile, int user, int channel, int true_state,
          RandomStream& stream) {
  if (user < 0 || user >= profile.users() || channel < 0 || channel >= profile.channels()) {
    throw std::out_of_range("sense: user or channel index out of range");
  }
  if (true_state == 1) {
    return stream.bernoulli(profile.false_alarm(user, channel)) ? 0 : 1;
  }
  return stream.bernoulli(profile.miss_detection(user, channel)) ? 1 : 0;
}

}  // namespace osa
