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

#ifndef OSA_RNG_HPP
#define OSA_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace osa {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// One independent random sub-stream. Draws are produced with explicit 53-bit
/// uniforms so the bit stream does not depend on the standard library's
/// distribution implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, n). n must be >= 1.
  std::uint32_t uniform_below(std::uint32_t n) {
    auto v = static_cast<std::uint32_t>(uniform01() * static_cast<double>(n));
    return v >= n ? n - 1 : v;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

enum class StreamKind : std::uint64_t {
  kChannel = 1,    // primary channel state draws, one stream per channel
  kSensor = 2,     // detector outcome draws, one stream per user
  kSelection = 3,  // policy-internal selection draws, one stream per user
};

inline std::uint64_t derive_seed(std::uint64_t run_seed, StreamKind kind, std::uint64_t index) {
  std::uint64_t h = splitmix64(run_seed ^ 0x6f5902ac186b9b1cULL);
  h = splitmix64(h ^ (static_cast<std::uint64_t>(kind) << 56));
  return splitmix64(h ^ index);
}

/// The per-run random source, split deterministically into sub-streams so
/// that adding a user leaves the channel draws untouched and policies
/// compared on the same seed see the same primary-network realization.
class RunStreams {
 public:
  RunStreams(std::uint64_t run_seed, int channels, int users) {
    channel_.reserve(static_cast<std::size_t>(channels));
    for (int n = 0; n < channels; ++n) {
      channel_.emplace_back(derive_seed(run_seed, StreamKind::kChannel, static_cast<std::uint64_t>(n)));
    }
    sensor_.reserve(static_cast<std::size_t>(users));
    selection_.reserve(static_cast<std::size_t>(users));
    for (int k = 0; k < users; ++k) {
      sensor_.emplace_back(derive_seed(run_seed, StreamKind::kSensor, static_cast<std::uint64_t>(k)));
      selection_.emplace_back(derive_seed(run_seed, StreamKind::kSelection, static_cast<std::uint64_t>(k)));
    }
  }

  RandomStream& channel(int n) { return channel_[static_cast<std::size_t>(n)]; }
  RandomStream& sensor(int k) { return sensor_[static_cast<std::size_t>(k)]; }
  RandomStream& selection(int k) { return selection_[static_cast<std::size_t>(k)]; }

  int channels() const { return static_cast<int>(channel_.size()); }
  int users() const { return static_cast<int>(sensor_.size()); }

 private:
  std::vector<RandomStream> channel_;
  std::vector<RandomStream> sensor_;
  std::vector<RandomStream> selection_;
};

}  // namespace osa

#endif  // OSA_RNG_HPP
