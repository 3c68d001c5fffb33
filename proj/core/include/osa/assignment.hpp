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

#ifndef OSA_ASSIGNMENT_HPP
#define OSA_ASSIGNMENT_HPP

#include <cstdint>
#include <vector>

#include "osa/matrix.hpp"

namespace osa {

/// An injective map of the K users onto channels, plus the summed weight of
/// the selected cells.
struct Assignment {
  std::vector<int> channel_of;  // channel_of[k] = channel given to user k
  double value = 0.0;
};

/// Maximum-weight injective assignment of the K rows of `weights` (K <= N)
/// onto its N columns, via Kuhn-Munkres on the padded square cost matrix
/// (max entry - weight, with N - K all-zero rows).
///
/// +infinity entries mark unexplored channels; they are replaced by
/// (max finite entry + 1) before solving, so unexplored channels always win a
/// slot without breaking the arithmetic. Ties are broken toward the
/// lexicographically smallest channel_of sequence, making the result a pure
/// function of its input.
///
/// Throws std::invalid_argument with "more users than channels" when K > N.
Assignment hungarian_solve(const Matrix& weights);

/// Fairness-rotated solve: permutes the rows by k -> (k + t) mod K, solves,
/// and reports channel_of in original user numbering. On a fully symmetric
/// matrix the rotation cycles the tie-break priority, handing each user each
/// optimal channel once per K consecutive slots.
Assignment rotate_then_solve(const Matrix& weights, std::uint64_t t);

/// Circular scheme for symmetric networks: user k takes
/// ranked_channels[(k + t) mod K]. The ranked list is the current top-K
/// channels; over any window of K consecutive slots each user visits each of
/// them exactly once. Throws on duplicate channels in the list.
int round_robin_assign(const std::vector<int>& ranked_channels, int user, std::uint64_t t);

/// Exhaustive oracle: enumerates every injective assignment in lexicographic
/// channel_of order and keeps the first maximum, i.e. the same tie-break as
/// hungarian_solve. Guarded to K <= 6, N <= 8 ("oracle size limit").
Assignment brute_force_assign(const Matrix& weights);

/// For each user, the channels that appear in at least one value-optimal
/// assignment (membership decided by a pinned solve within `tol` of the
/// optimum). Used to score "user sits in its optimal set" occupancy.
std::vector<std::vector<int>> optimal_channel_sets(const Matrix& weights, double tol = 1e-9);

}  // namespace osa

#endif  // OSA_ASSIGNMENT_HPP
