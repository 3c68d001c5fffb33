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

#include <benchmark/benchmark.h>

#include "osa/assignment.hpp"
#include "osa/rng.hpp"

namespace {

osa::Matrix random_matrix(int users, int channels, std::uint64_t seed) {
  osa::RandomStream stream(seed);
  osa::Matrix w(static_cast<std::size_t>(users), static_cast<std::size_t>(channels));
  for (std::size_t r = 0; r < w.rows(); ++r) {
    for (std::size_t c = 0; c < w.cols(); ++c) w(r, c) = stream.uniform01();
  }
  return w;
}

void BM_HungarianSolve(benchmark::State& state) {
  const auto w = random_matrix(static_cast<int>(state.range(0)),
                               static_cast<int>(state.range(1)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(osa::hungarian_solve(w));
  }
}
BENCHMARK(BM_HungarianSolve)->Args({3, 10})->Args({4, 10})->Args({6, 10})->Args({8, 8});

void BM_RotateThenSolve(benchmark::State& state) {
  const auto w = random_matrix(3, 10, 7);
  std::uint64_t t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(osa::rotate_then_solve(w, t++));
  }
}
BENCHMARK(BM_RotateThenSolve);

void BM_RotateThenSolveSymmetric(benchmark::State& state) {
  // Identical rows maximize assignment ties, the worst case for the
  // lexicographic refinement.
  osa::Matrix w(3, 10);
  const std::vector<double> row{0.1, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  for (int k = 0; k < 3; ++k) w.set_row(static_cast<std::size_t>(k), row);
  std::uint64_t t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(osa::rotate_then_solve(w, t++));
  }
}
BENCHMARK(BM_RotateThenSolveSymmetric);

void BM_BruteForce(benchmark::State& state) {
  const auto w = random_matrix(4, 6, 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(osa::brute_force_assign(w));
  }
}
BENCHMARK(BM_BruteForce);

}  // namespace
