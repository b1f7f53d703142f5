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

// Streaming walk kernels. One call runs one trajectory from the origin and
// keeps only the statistics it needs; positions are never stored.
//
// All kernels consume the same TritStream as Simulate(), so a kernel run and
// a recorded trajectory with the same (seed, stream) describe the same path.

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "orientwalk/env.hpp"
#include "orientwalk/rng.hpp"

namespace orientwalk::kernels {

/// Caches signs of an expensive rule in a dense buffer around the origin.
template <class Rule>
class CachedSigns {
 public:
  explicit CachedSigns(Rule rule) : rule_(std::move(rule)) {}

  int operator()(std::int64_t y) {
    std::int64_t i = y + offset_;
    if (i < 0 || i >= static_cast<std::int64_t>(cache_.size())) {
      Grow(y);
      i = y + offset_;
    }
    auto& s = cache_[static_cast<std::size_t>(i)];
    if (s == 0) s = static_cast<std::int8_t>(rule_(y));
    return s;
  }

 private:
  void Grow(std::int64_t y) {
    const auto old_size = static_cast<std::int64_t>(cache_.size());
    std::int64_t lo = -offset_;
    std::int64_t hi = lo + old_size;
    const std::int64_t span = std::max<std::int64_t>(64, 2 * old_size);
    while (y < lo) lo -= span / 2;
    while (y >= hi) hi += span / 2;
    std::vector<std::int8_t> grown(static_cast<std::size_t>(hi - lo), 0);
    std::copy(cache_.begin(), cache_.end(),
              grown.begin() + (-offset_ - lo));
    cache_ = std::move(grown);
    offset_ = -lo;
  }

  Rule rule_;
  std::vector<std::int8_t> cache_;
  std::int64_t offset_ = 0;
};

template <class Rule>
auto MakeLookup(const Rule& rule) {
  if constexpr (std::is_same_v<Rule, RandomSigns> ||
                std::is_same_v<Rule, ExplicitSigns>) {
    return CachedSigns<Rule>(rule);
  } else {
    return rule;
  }
}

/// Dense per-level counters over a growing ordinate window.
class LevelCounts {
 public:
  std::uint32_t Increment(std::int64_t y) {
    std::int64_t i = y + offset_;
    if (i < 0 || i >= static_cast<std::int64_t>(counts_.size())) {
      Grow(y);
      i = y + offset_;
    }
    return ++counts_[static_cast<std::size_t>(i)];
  }

 private:
  void Grow(std::int64_t y) {
    const auto old_size = static_cast<std::int64_t>(counts_.size());
    std::int64_t lo = -offset_;
    std::int64_t hi = lo + old_size;
    const std::int64_t step = std::max<std::int64_t>(32, old_size);
    while (y < lo) lo -= step;
    while (y >= hi) hi += step;
    std::vector<std::uint32_t> grown(static_cast<std::size_t>(hi - lo), 0);
    std::copy(counts_.begin(), counts_.end(),
              grown.begin() + (-offset_ - lo));
    counts_ = std::move(grown);
    offset_ = -lo;
  }

  std::vector<std::uint32_t> counts_;
  std::int64_t offset_ = 0;
};

/// State of the chain at the n-th return of the vertical skeleton to 0.
struct EpochOutcome {
  std::int64_t x = 0;                  // X_{σ_n}
  std::int64_t signed_occupation = 0;  // Σ_y ε_y η_{σ_n - 1}(y)
  std::uint64_t chain_steps = 0;       // T_{σ_n}, or steps used if censored
  bool censored = false;               // cap hit before σ_n
};

/// Runs until the skeleton has returned to level 0 `returns` times, or until
/// `cap` chain steps have been taken.
template <class Signs>
EpochOutcome RunToSkeletonReturn(Signs signs, TritStream moves,
                                 std::uint64_t returns, std::uint64_t cap) {
  EpochOutcome out;
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t occupation = 0;
  std::uint64_t seen = 0;
  std::uint64_t t = 0;
  if (returns == 0) return out;
  while (t < cap) {
    const int move = moves.Next();
    ++t;
    if (move == 2) {
      x += signs(y);
      continue;
    }
    occupation += signs(y);
    y += move == 0 ? 1 : -1;
    if (y == 0 && ++seen == returns) {
      out.x = x;
      out.signed_occupation = occupation;
      out.chain_steps = t;
      return out;
    }
  }
  out.x = x;
  out.signed_occupation = occupation;
  out.chain_steps = t;
  out.censored = true;
  return out;
}

/// Origin visits (time 0 included) within each budget; budgets ascending.
template <class Signs>
void CountOriginVisits(Signs signs, TritStream moves,
                       std::span<const std::uint64_t> budgets,
                       std::span<std::uint64_t> visits) {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::uint64_t count = 1;
  std::uint64_t t = 0;
  for (std::size_t b = 0; b < budgets.size(); ++b) {
    const std::uint64_t budget = budgets[b];
    while (t < budget) {
      const int move = moves.Next();
      ++t;
      if (move == 2) {
        x += signs(y);
        // Horizontal moves can only land on the origin along level 0.
        count += (y == 0) & (x == 0);
      } else {
        y += move == 0 ? 1 : -1;
        count += (y == 0) & (x == 0);
      }
    }
    visits[b] = count;
  }
}

/// Skeleton statistics after the n-th vertical move (chain time T_n).
struct SkeletonSnapshot {
  std::uint64_t n = 0;
  std::int64_t x = 0;                 // X_n
  std::int64_t y = 0;                 // Y_n
  std::int64_t delta = 0;             // Δ_n = Σ_{k<n} ε_{Y_k}
  std::int64_t max_abs_y = 0;         // max_{k<=n} |Y_k|
  std::uint32_t max_occupation = 0;   // max_y η_{n-1}(y); 0 if not tracked
  std::uint64_t chain_steps = 0;      // T_n
  bool censored = false;
};

/// Records a snapshot at each skeleton index in `grid` (ascending, >= 1).
/// Occupation maxima cost one counter update per vertical move and are only
/// tracked when asked for.
template <class Signs>
void TrackSkeleton(Signs signs, TritStream moves,
                   std::span<const std::uint64_t> grid, std::uint64_t cap,
                   bool track_occupation,
                   std::span<SkeletonSnapshot> snapshots) {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t delta = 0;
  std::int64_t max_abs_y = 0;
  std::uint32_t max_occupation = 0;
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  LevelCounts counts;
  std::size_t next = 0;
  while (next < grid.size() && t < cap) {
    const int move = moves.Next();
    ++t;
    if (move == 2) {
      x += signs(y);
      continue;
    }
    delta += signs(y);
    if (track_occupation) {
      max_occupation = std::max(max_occupation, counts.Increment(y));
    }
    y += move == 0 ? 1 : -1;
    max_abs_y = std::max<std::int64_t>(max_abs_y, y < 0 ? -y : y);
    ++n;
    while (next < grid.size() && grid[next] == n) {
      snapshots[next] = {n, x, y, delta, max_abs_y, max_occupation, t, false};
      ++next;
    }
  }
  for (; next < grid.size(); ++next) {
    snapshots[next] = {n, x, y, delta, max_abs_y, max_occupation, t, true};
  }
}

/// First return time of a simple symmetric walk to 0 driven by raw bits;
/// returns 0 when not reached within `cap` steps.
inline std::uint64_t SampleFirstReturn(WordReader& bits, std::uint64_t cap) {
  std::int64_t y = bits.NextBit() ? 1 : -1;
  std::uint64_t t = 1;
  while (y != 0) {
    if (t >= cap) return 0;
    y += bits.NextBit() ? 1 : -1;
    ++t;
  }
  return t;
}

}  // namespace orientwalk::kernels
