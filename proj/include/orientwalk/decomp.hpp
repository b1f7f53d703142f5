// Copyright 2026 The orientwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Skeleton/waiting-time decomposition of a lattice trajectory.
//
// The vertical increments ψ̃ of a trajectory (0 for horizontal moves) split
// into the skeleton increments ψ (the nonzero entries, a simple walk Y) and
// the waiting times ξ̃: xi_tilde[k] is the number of horizontal moves made
// while the skeleton sits at Y_k, i.e. between vertical moves k and k+1.
//
//   ψ̃   = 1 0 0 -1 -1 -1 0 0 0 0 1 0 0 0 1
//   ψ   = 1, -1, -1, -1, 1, 1
//   ξ̃   = 0, 2, 0, 0, 4, 3
//
// xi_tilde has one entry per skeleton level Y_0..Y_{m-1}, plus a trailing
// entry for Y_m only when the sequence ends on horizontal moves; alpha is 1
// exactly when the sequence opens with a horizontal block.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "orientwalk/env.hpp"
#include "orientwalk/walk.hpp"

namespace orientwalk {

struct Decomposition {
  std::vector<std::int8_t> psi;
  std::vector<std::uint64_t> xi_tilde;
  bool alpha = false;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// ψ̃_k = vertical component of move k (k = 1..n, stored from index 0).
std::vector<std::int8_t> ExtractIncrements(const Trajectory& trajectory);

/// Entries must be in {-1, 0, 1}, else std::invalid_argument.
Decomposition Decompose(std::span<const std::int8_t> psi_tilde);

/// Throws std::invalid_argument unless `d` is a canonical decomposition:
/// ψ entries ±1; |ξ̃| = |ψ| or |ψ| + 1 with a positive trailing entry;
/// alpha == (ξ̃_0 > 0).
void ValidateDecomposition(const Decomposition& d);

/// Exact inverse of Decompose; validates first.
std::vector<std::int8_t> Reconstruct(const Decomposition& d);

/// Waiting time at skeleton index k (0 past the recorded entries).
inline std::uint64_t WaitAt(const Decomposition& d, std::size_t k) {
  return k < d.xi_tilde.size() ? d.xi_tilde[k] : 0;
}

/// Vertical skeleton of a decomposition under an environment.
class SkeletonView {
 public:
  SkeletonView(const Decomposition& d, const Environment& env);

  /// Number of skeleton steps m.
  std::size_t steps() const { return y_.size() - 1; }

  /// Y_0..Y_m.
  std::span<const std::int64_t> levels() const { return y_; }
  /// σ_0 = 0 < σ_1 < ... : skeleton indices with Y = 0.
  std::span<const std::uint64_t> returns() const { return sigma_; }
  /// T_0..T_m: chain time just after the n-th vertical move.
  std::span<const std::uint64_t> vertical_times() const { return t_; }
  /// X_0..X_m: abscissa at time T_n.
  std::span<const std::int64_t> embedded() const { return x_; }
  /// Δ_0..Δ_m from the running count N₊ − N₋ of ε_{Y_k}, k < n.
  std::span<const std::int64_t> delta() const { return delta_; }

  std::int64_t min_level() const { return min_level_; }
  std::int64_t max_level() const { return max_level_; }

  /// η_n(y) = #{k <= n : Y_k = y}; n <= steps().
  std::uint64_t Occupation(std::uint64_t n, std::int64_t y) const;

  /// Σ_y η_{n-1}(y) over the visited levels (equals n).
  std::uint64_t TotalOccupation(std::uint64_t n) const;

  /// Σ_y ε_y η_{n-1}(y) from the occupation table; 1 <= n <= steps().
  std::int64_t SignedOccupation(std::uint64_t n) const;

  /// ξ^{(y)}_1, ξ^{(y)}_2, ...: waits at level y in visit order.
  std::span<const std::uint64_t> LevelWaits(std::int64_t y) const;

 private:
  std::size_t LevelIndex(std::int64_t y) const {
    return static_cast<std::size_t>(y - min_level_);
  }

  std::vector<std::int64_t> y_;
  std::vector<std::uint64_t> sigma_;
  std::vector<std::uint64_t> t_;
  std::vector<std::int64_t> x_;
  std::vector<std::int64_t> delta_;
  std::int64_t min_level_ = 0;
  std::int64_t max_level_ = 0;
  std::vector<int> level_sign_;
  std::vector<std::vector<std::uint64_t>> visit_times_;
  std::vector<std::vector<std::uint64_t>> level_waits_;
};

/// X_0..X_m with X_n = Σ_y ε_y Σ_{i <= η_{n-1}(y)} ξ^{(y)}_i.
std::vector<std::int64_t> EmbeddedPositions(const Decomposition& d,
                                            const Environment& env);

/// Σ_y (-1)^y η_{σ_n - 1}(y); nullopt when σ_n is not reached.
std::optional<std::int64_t> AlternatingOccupationSum(const SkeletonView& view,
                                                     std::uint64_t n);

/// Per-epoch comparison of actual origin visits against the straddle
/// criterion 0 ∈ I(X_{σ_n}, ε_0 Z_n), Z_n being the realized horizontal run
/// at the start of epoch n. Epochs n >= 1 whose σ_n lies within the
/// trajectory are listed.
struct StraddleCount {
  std::uint64_t returns = 0;    // origin visits after time 0
  std::uint64_t straddles = 0;  // epochs whose interval contains 0
  std::vector<bool> visited;    // per epoch: some position in it is (0, 0)
  std::vector<bool> straddled;  // per epoch: interval contains 0
};

StraddleCount StraddleReturnCount(const Trajectory& trajectory,
                                  const Environment& env);

/// CSV with header `index,psi,xi_tilde`. Row j carries ψ_j (empty for j = 0)
/// and the wait at level Y_j (empty when no entry is recorded).
void WriteDecompositionCsv(std::ostream& out, const Decomposition& d);

}  // namespace orientwalk
