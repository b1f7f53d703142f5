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

// The simple random walk on an oriented lattice: from (x, y) the chain moves
// to (x, y+1), (x, y-1) or (x + ε_y, y), each with probability 1/3.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "orientwalk/env.hpp"

namespace orientwalk {

struct LatticeState {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticeState&, const LatticeState&) = default;
};

/// Move tags in draw order: a uniform draw d in {1,2,3} selects Move(d - 1).
enum class Move : std::uint8_t { kUp = 0, kDown = 1, kHorizontal = 2 };

/// Maps a draw in {1, 2, 3} to its move; std::invalid_argument otherwise.
Move MoveFromDraw(int draw);

/// One chain step. Throws std::out_of_range when a coordinate would reach
/// magnitude 2^62.
LatticeState Step(LatticeState state, const Environment& env, Move move);

/// Upper bound on fully recorded trajectories.
inline constexpr std::uint64_t kDefaultMaxRecordSteps = 100'000'000;

struct Trajectory {
  std::vector<Move> moves;
  /// positions[0] is the origin; positions.size() == moves.size() + 1.
  std::vector<LatticeState> positions{LatticeState{}};
};

/// Runs `steps` moves from the origin with move tags drawn from
/// TritStream(seed, stream). Throws std::length_error when steps exceeds
/// max_record_steps.
Trajectory Simulate(const Environment& env, std::uint64_t steps,
                    std::uint64_t seed, std::uint64_t stream = 0,
                    std::uint64_t max_record_steps = kDefaultMaxRecordSteps);

/// Applies a given move sequence from the origin.
Trajectory Replay(const Environment& env, std::span<const Move> moves);

/// Number of k >= 0 with positions[k] == (0, 0).
std::uint64_t OriginVisits(const Trajectory& trajectory);

/// Statistics-only simulation; no per-step storage.
struct WalkSummary {
  std::uint64_t steps = 0;
  LatticeState final_state;
  std::uint64_t origin_visits = 1;  // includes time 0
  std::uint64_t up = 0;
  std::uint64_t down = 0;
  std::uint64_t horizontal = 0;
};

WalkSummary SimulateStreaming(const Environment& env, std::uint64_t steps,
                              std::uint64_t seed, std::uint64_t stream = 0);

/// CSV with header `step,x,y`, one row per position.
void WriteTrajectoryCsv(std::ostream& out, const Trajectory& trajectory);

/// Inverse of WriteTrajectoryCsv. Validates that rows start at the origin
/// and that consecutive positions differ by one lattice move; horizontal
/// directions are not checked against any environment.
Trajectory ReadTrajectoryCsv(std::istream& in);

}  // namespace orientwalk
