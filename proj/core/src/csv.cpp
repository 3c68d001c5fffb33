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

#include "osa/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace osa {

namespace {

void append_number(std::string& out, double value) {
  // Shortest fixed-notation decimal that round-trips; never scientific, never
  // localized.
  char buffer[384];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::fixed);
  if (ec != std::errc()) throw std::runtime_error("format_csv: number conversion failed");
  out.append(buffer, ptr);
}

void append_number(std::string& out, std::uint64_t value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("format_csv: number conversion failed");
  out.append(buffer, ptr);
}

}  // namespace

std::string format_csv(const SampledTrace& trace) {
  std::string out =
      "slot,mean_regret,se_regret,mean_ntp_bytes,se_ntp,optimal_set_fraction,"
      "pu_interference_rate,su_collision_rate\n";
  for (std::size_t i = 0; i < trace.slots.size(); ++i) {
    append_number(out, trace.slots[i]);
    out.push_back(',');
    append_number(out, trace.mean_regret[i]);
    out.push_back(',');
    append_number(out, trace.se_regret[i]);
    out.push_back(',');
    append_number(out, trace.mean_ntp_bytes[i]);
    out.push_back(',');
    append_number(out, trace.se_ntp[i]);
    out.push_back(',');
    append_number(out, trace.optimal_set_fraction[i]);
    out.push_back(',');
    append_number(out, trace.pu_interference_rate[i]);
    out.push_back(',');
    append_number(out, trace.su_collision_rate[i]);
    out.push_back('\n');
  }
  return out;
}

void write_csv(const SampledTrace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("write_csv: cannot open '" + path + "' for writing");
  const std::string text = format_csv(trace);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write_csv: write to '" + path + "' failed");
}

}  // namespace osa
