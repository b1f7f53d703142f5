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

#include "orientwalk/walk.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "orientwalk/kernels.hpp"

namespace orientwalk {

Move MoveFromDraw(int draw) {
  if (draw < 1 || draw > 3) {
    throw std::invalid_argument("move draw must be in {1,2,3}");
  }
  return static_cast<Move>(draw - 1);
}

LatticeState Step(LatticeState state, const Environment& env, Move move) {
  switch (move) {
    case Move::kUp:
      state.y += 1;
      CheckCoordinate(state.y, "ordinate");
      break;
    case Move::kDown:
      state.y -= 1;
      CheckCoordinate(state.y, "ordinate");
      break;
    case Move::kHorizontal:
      state.x += env.Epsilon(state.y);
      CheckCoordinate(state.x, "abscissa");
      break;
  }
  return state;
}

Trajectory Simulate(const Environment& env, std::uint64_t steps,
                    std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t max_record_steps) {
  if (steps > max_record_steps) {
    throw std::length_error("recorded trajectory of " + std::to_string(steps) +
                            " steps exceeds the cap of " +
                            std::to_string(max_record_steps));
  }
  Trajectory trajectory;
  trajectory.moves.reserve(steps);
  trajectory.positions.reserve(steps + 1);
  TritStream draws(seed, stream);
  LatticeState state;
  for (std::uint64_t i = 0; i < steps; ++i) {
    const auto move = static_cast<Move>(draws.Next());
    state = Step(state, env, move);
    trajectory.moves.push_back(move);
    trajectory.positions.push_back(state);
  }
  return trajectory;
}

Trajectory Replay(const Environment& env, std::span<const Move> moves) {
  Trajectory trajectory;
  trajectory.moves.assign(moves.begin(), moves.end());
  trajectory.positions.reserve(moves.size() + 1);
  LatticeState state;
  for (const Move move : moves) {
    state = Step(state, env, move);
    trajectory.positions.push_back(state);
  }
  return trajectory;
}

std::uint64_t OriginVisits(const Trajectory& trajectory) {
  std::uint64_t visits = 0;
  for (const auto& p : trajectory.positions) visits += p == LatticeState{};
  return visits;
}

WalkSummary SimulateStreaming(const Environment& env, std::uint64_t steps,
                              std::uint64_t seed, std::uint64_t stream) {
  return env.Visit([&](const auto& rule) {
    auto signs = kernels::MakeLookup(rule);
    TritStream draws(seed, stream);
    WalkSummary summary;
    summary.steps = steps;
    std::int64_t x = 0;
    std::int64_t y = 0;
    for (std::uint64_t i = 0; i < steps; ++i) {
      switch (draws.Next()) {
        case 0:
          ++y;
          ++summary.up;
          break;
        case 1:
          --y;
          ++summary.down;
          break;
        default:
          x += signs(y);
          ++summary.horizontal;
          break;
      }
      summary.origin_visits += (x == 0) & (y == 0);
    }
    CheckCoordinate(x, "abscissa");
    CheckCoordinate(y, "ordinate");
    summary.final_state = {x, y};
    return summary;
  });
}

void WriteTrajectoryCsv(std::ostream& out, const Trajectory& trajectory) {
  out << "step,x,y\n";
  for (std::size_t i = 0; i < trajectory.positions.size(); ++i) {
    const auto& p = trajectory.positions[i];
    out << i << ',' << p.x << ',' << p.y << '\n';
  }
}

Trajectory ReadTrajectoryCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "step,x,y") {
    throw std::invalid_argument("trajectory CSV must start with 'step,x,y'");
  }
  Trajectory trajectory;
  trajectory.positions.clear();
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::uint64_t step = 0;
    LatticeState p;
    char c1 = 0, c2 = 0;
    if (!(fields >> step >> c1 >> p.x >> c2 >> p.y) || c1 != ',' ||
        c2 != ',' || step != row) {
      throw std::invalid_argument("malformed trajectory row " +
                                  std::to_string(row) + ": '" + line + "'");
    }
    if (row == 0) {
      if (p != LatticeState{}) {
        throw std::invalid_argument("trajectory must start at the origin");
      }
    } else {
      const auto& q = trajectory.positions.back();
      const std::int64_t dx = p.x - q.x;
      const std::int64_t dy = p.y - q.y;
      if (dx == 0 && dy == 1) {
        trajectory.moves.push_back(Move::kUp);
      } else if (dx == 0 && dy == -1) {
        trajectory.moves.push_back(Move::kDown);
      } else if (dy == 0 && (dx == 1 || dx == -1)) {
        trajectory.moves.push_back(Move::kHorizontal);
      } else {
        throw std::invalid_argument("row " + std::to_string(row) +
                                    " is not one lattice move from row " +
                                    std::to_string(row - 1));
      }
    }
    trajectory.positions.push_back(p);
    ++row;
  }
  if (trajectory.positions.empty()) {
    throw std::invalid_argument("trajectory CSV has no rows");
  }
  return trajectory;
}

}  // namespace orientwalk
