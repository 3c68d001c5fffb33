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

#ifndef OSA_CSV_HPP
#define OSA_CSV_HPP

#include <string>

#include "osa/runner.hpp"

namespace osa {

/// The CSV emitted for every batch: a header row plus one row per sampled
/// slot with columns slot, mean_regret, se_regret, mean_ntp_bytes, se_ntp,
/// optimal_set_fraction, pu_interference_rate, su_collision_rate. Numbers are
/// printed as shortest round-trip decimals, independent of locale.
std::string format_csv(const SampledTrace& trace);

/// Writes format_csv(trace) to path; I/O failures surface as
/// std::runtime_error.
void write_csv(const SampledTrace& trace, const std::string& path);

}  // namespace osa

#endif  // OSA_CSV_HPP
