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

#include "osa/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace osa {

namespace {

constexpr double kTieTolerance = 1e-9;

// Weights with the +inf exploration sentinels replaced by a finite value that
// still dominates every real entry.
Matrix substitute_sentinels(const Matrix& weights) {
  double max_finite = 0.0;
  bool any_finite = false;
  for (std::size_t r = 0; r < weights.rows(); ++r) {
    for (std::size_t c = 0; c < weights.cols(); ++c) {
      const double w = weights(r, c);
      if (std::isnan(w) || w == -std::numeric_limits<double>::infinity()) {
        throw std::invalid_argument("hungarian_solve: weight must be finite or +inf");
      }
      if (std::isfinite(w)) {
        max_finite = any_finite ? std::max(max_finite, w) : w;
        any_finite = true;
      }
    }
  }
  Matrix out = weights;
  const double stand_in = (any_finite ? max_finite : 0.0) + 1.0;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      if (!std::isfinite(out(r, c))) out(r, c) = stand_in;
    }
  }
  return out;
}

// Kuhn-Munkres with row/column potentials on an n x n minimization problem.
// cost(i, j) must be finite. Returns col_of_row.
template <typename CostFn>
std::vector<int> solve_square_min(int n, CostFn cost) {
  const double kInf = std::numeric_limits<double>::max();
  std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(static_cast<std::size_t>(n) + 1, kInf);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = p[static_cast<std::size_t>(j0)];
      int j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] -
                           v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> col_of_row(static_cast<std::size_t>(n), -1);
  for (int j = 1; j <= n; ++j) {
    col_of_row[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)] = j - 1;
  }
  return col_of_row;
}

// Best total weight assigning the users in `rows` injectively onto the
// channels in `cols` (rows.size() <= cols.size()), using finite weights.
double best_completion(const Matrix& ws, const std::vector<int>& rows,
                       const std::vector<int>& cols, double max_weight) {
  if (rows.empty()) return 0.0;
  const int n = static_cast<int>(cols.size());
  const int real = static_cast<int>(rows.size());
  auto cost = [&](int i, int j) {
    if (i >= real) return 0.0;  // padded row, indifferent
    return max_weight - ws(static_cast<std::size_t>(rows[static_cast<std::size_t>(i)]),
                           static_cast<std::size_t>(cols[static_cast<std::size_t>(j)]));
  };
  const std::vector<int> match = solve_square_min(n, cost);
  double total = 0.0;
  for (int i = 0; i < real; ++i) {
    total += ws(static_cast<std::size_t>(rows[static_cast<std::size_t>(i)]),
                static_cast<std::size_t>(cols[static_cast<std::size_t>(match[static_cast<std::size_t>(i)])]));
  }
  return total;
}

double matrix_max(const Matrix& m) {
  double best = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) best = std::max(best, m(r, c));
  }
  return best;
}

double value_in_user_order(const Matrix& weights, const std::vector<int>& channel_of) {
  double total = 0.0;
  for (std::size_t k = 0; k < channel_of.size(); ++k) {
    total += weights(k, static_cast<std::size_t>(channel_of[k]));
  }
  return total;
}

}  // namespace

Assignment hungarian_solve(const Matrix& weights) {
  const int users = static_cast<int>(weights.rows());
  const int channels = static_cast<int>(weights.cols());
  if (users == 0 || channels == 0) {
    throw std::invalid_argument("hungarian_solve: empty weight matrix");
  }
  if (users > channels) {
    throw std::invalid_argument("hungarian_solve: more users than channels");
  }

  const Matrix ws = substitute_sentinels(weights);
  const double max_weight = matrix_max(ws);

  std::vector<int> all_rows(static_cast<std::size_t>(users));
  for (int k = 0; k < users; ++k) all_rows[static_cast<std::size_t>(k)] = k;
  std::vector<int> all_cols(static_cast<std::size_t>(channels));
  for (int c = 0; c < channels; ++c) all_cols[static_cast<std::size_t>(c)] = c;

  const double optimum = best_completion(ws, all_rows, all_cols, max_weight);

  // Pin users in order to the smallest channel that still reaches the
  // optimum; this yields the lexicographically smallest optimal channel_of.
  Assignment result;
  result.channel_of.assign(static_cast<std::size_t>(users), -1);
  std::vector<char> taken(static_cast<std::size_t>(channels), 0);
  double pinned_weight = 0.0;
  for (int k = 0; k < users; ++k) {
    std::vector<int> tail_rows;
    for (int r = k + 1; r < users; ++r) tail_rows.push_back(r);
    std::vector<int> open_cols;
    for (int j = 0; j < channels; ++j) {
      if (!taken[static_cast<std::size_t>(j)]) open_cols.push_back(j);
    }
    // Upper bound on any candidate's completion: the tail may still use the
    // candidate column here, so infeasible channels are rejected without a
    // full solve.
    const double tail_upper = best_completion(ws, tail_rows, open_cols, max_weight);
    for (const int c : open_cols) {
      const double weight_kc = ws(static_cast<std::size_t>(k), static_cast<std::size_t>(c));
      if (pinned_weight + weight_kc + tail_upper < optimum - kTieTolerance) continue;
      std::vector<int> free_cols;
      free_cols.reserve(open_cols.size() - 1);
      for (const int j : open_cols) {
        if (j != c) free_cols.push_back(j);
      }
      const double candidate =
          pinned_weight + weight_kc + best_completion(ws, tail_rows, free_cols, max_weight);
      if (candidate >= optimum - kTieTolerance) {
        result.channel_of[static_cast<std::size_t>(k)] = c;
        taken[static_cast<std::size_t>(c)] = 1;
        pinned_weight += weight_kc;
        break;
      }
    }
  }
  result.value = value_in_user_order(weights, result.channel_of);
  return result;
}

Assignment rotate_then_solve(const Matrix& weights, std::uint64_t t) {
  const std::uint64_t users = weights.rows();
  if (users == 0) {
    throw std::invalid_argument("rotate_then_solve: empty weight matrix");
  }
  Matrix rotated(weights.rows(), weights.cols());
  for (std::uint64_t j = 0; j < users; ++j) {
    rotated.set_row(j, weights.row((j + t) % users));
  }
  const Assignment solved = hungarian_solve(rotated);
  Assignment result;
  result.channel_of.assign(weights.rows(), -1);
  for (std::uint64_t j = 0; j < users; ++j) {
    result.channel_of[(j + t) % users] = solved.channel_of[j];
  }
  result.value = value_in_user_order(weights, result.channel_of);
  return result;
}

int round_robin_assign(const std::vector<int>& ranked_channels, int user, std::uint64_t t) {
  const std::size_t k_users = ranked_channels.size();
  if (k_users == 0) {
    throw std::invalid_argument("round_robin_assign: empty ranked list");
  }
  for (std::size_t i = 0; i < k_users; ++i) {
    for (std::size_t j = i + 1; j < k_users; ++j) {
      if (ranked_channels[i] == ranked_channels[j]) {
        throw std::invalid_argument("round_robin_assign: duplicate channels in ranked list");
      }
    }
  }
  if (user < 0 || static_cast<std::size_t>(user) >= k_users) {
    throw std::out_of_range("round_robin_assign: user index out of range");
  }
  return ranked_channels[(static_cast<std::uint64_t>(user) + t) % k_users];
}

Assignment brute_force_assign(const Matrix& weights) {
  const int users = static_cast<int>(weights.rows());
  const int channels = static_cast<int>(weights.cols());
  if (users == 0 || channels == 0) {
    throw std::invalid_argument("brute_force_assign: empty weight matrix");
  }
  if (users > channels) {
    throw std::invalid_argument("brute_force_assign: more users than channels");
  }
  if (users > 6 || channels > 8) {
    throw std::invalid_argument("brute_force_assign: oracle size limit");
  }

  const Matrix ws = substitute_sentinels(weights);

  std::vector<int> current(static_cast<std::size_t>(users), -1);
  std::vector<char> taken(static_cast<std::size_t>(channels), 0);
  Assignment best;
  best.value = -std::numeric_limits<double>::infinity();
  double best_sub = -std::numeric_limits<double>::infinity();

  // Depth-first in ascending channel order per user: candidates are generated
  // in lexicographic channel_of order, and a strict improvement test keeps
  // the first (lexicographically smallest) optimum.
  auto descend = [&](auto&& self, int k, double acc) -> void {
    if (k == users) {
      if (acc > best_sub) {
        best_sub = acc;
        best.channel_of = current;
      }
      return;
    }
    for (int c = 0; c < channels; ++c) {
      if (taken[static_cast<std::size_t>(c)]) continue;
      taken[static_cast<std::size_t>(c)] = 1;
      current[static_cast<std::size_t>(k)] = c;
      self(self, k + 1, acc + ws(static_cast<std::size_t>(k), static_cast<std::size_t>(c)));
      taken[static_cast<std::size_t>(c)] = 0;
    }
  };
  descend(descend, 0, 0.0);

  best.value = value_in_user_order(weights, best.channel_of);
  return best;
}

std::vector<std::vector<int>> optimal_channel_sets(const Matrix& weights, double tol) {
  const int users = static_cast<int>(weights.rows());
  const int channels = static_cast<int>(weights.cols());
  if (users > channels) {
    throw std::invalid_argument("optimal_channel_sets: more users than channels");
  }
  const Matrix ws = substitute_sentinels(weights);
  const double max_weight = matrix_max(ws);

  std::vector<int> all_rows(static_cast<std::size_t>(users));
  for (int k = 0; k < users; ++k) all_rows[static_cast<std::size_t>(k)] = k;
  std::vector<int> all_cols(static_cast<std::size_t>(channels));
  for (int c = 0; c < channels; ++c) all_cols[static_cast<std::size_t>(c)] = c;
  const double optimum = best_completion(ws, all_rows, all_cols, max_weight);

  std::vector<std::vector<int>> sets(static_cast<std::size_t>(users));
  for (int k = 0; k < users; ++k) {
    std::vector<int> other_rows;
    for (int r = 0; r < users; ++r) {
      if (r != k) other_rows.push_back(r);
    }
    for (int c = 0; c < channels; ++c) {
      std::vector<int> free_cols;
      for (int j = 0; j < channels; ++j) {
        if (j != c) free_cols.push_back(j);
      }
      const double pinned = ws(static_cast<std::size_t>(k), static_cast<std::size_t>(c)) +
                            best_completion(ws, other_rows, free_cols, max_weight);
      if (pinned >= optimum - tol) {
        sets[static_cast<std::size_t>(k)].push_back(c);
      }
    }
  }
  return sets;
}

}  // namespace osa
