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

// Horizontal orientation environments: one sign per ordinate telling whether
// the horizontal line at that level is right-going (+1) or left-going (-1).

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orientwalk/rng.hpp"

namespace orientwalk {

/// Ordinates and abscissas must stay strictly below this magnitude.
inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 62;

/// Throws std::out_of_range if |v| >= 2^62.
void CheckCoordinate(std::int64_t v, const char* what);

// Concrete sign rules. Each is a cheap value type with `int operator()(y)`;
// the walk kernels are instantiated per rule.

struct AlternateSigns {
  int operator()(std::int64_t y) const { return (y & 1) ? -1 : 1; }
};

struct HalfPlaneSigns {
  int operator()(std::int64_t y) const { return y >= 0 ? 1 : -1; }
};

/// Bands [k*width, (k+1)*width) share a sign; sign alternates in k, band 0 is +1.
struct StripSigns {
  std::int64_t width;
  int operator()(std::int64_t y) const {
    // floor division
    std::int64_t band = y / width;
    if (y % width != 0 && y < 0) --band;
    return (band & 1) ? -1 : 1;
  }
};

/// Low bit of Philox(seed, y).
struct RandomSigns {
  std::uint64_t seed;
  int operator()(std::int64_t y) const {
    const auto u = static_cast<std::uint64_t>(y);
    const Philox4x32::Counter out = Philox4x32::Apply(
        {static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(u >> 32),
         0x6f726965u, 0x6e747331u},
        {static_cast<std::uint32_t>(seed),
         static_cast<std::uint32_t>(seed >> 32)});
    return (out[0] & 1) ? 1 : -1;
  }
};

/// Lookup table; ordinates outside the table are a range error.
struct ExplicitSigns {
  std::shared_ptr<const std::map<std::int64_t, int>> table;
  int operator()(std::int64_t y) const;
};

class Environment {
 public:
  enum class Kind { kAlternate, kHalfPlane, kStrip, kRandomIid, kExplicit };

  static Environment Alternate();
  static Environment HalfPlane();
  /// width >= 1, else std::invalid_argument.
  static Environment Strip(std::int64_t width);
  static Environment RandomIid(std::uint64_t seed);
  /// Every sign must be +1 or -1, else std::invalid_argument.
  static Environment Explicit(std::map<std::int64_t, int> table);

  Kind kind() const;

  /// ε_y. Throws std::out_of_range when |y| >= 2^62 or y is missing from an
  /// explicit table.
  int Epsilon(std::int64_t y) const;

  /// Calls `fn` with the concrete sign rule.
  template <class Fn>
  decltype(auto) Visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), rule_);
  }

  /// Environment used by trial `trial` when environments are resampled per
  /// trial: a fresh seed for random environments, the same lattice otherwise.
  Environment ForTrial(std::uint64_t trial) const;

  /// Canonical spec string (see ParseEnvironment). Explicit tables render as
  /// `explicit:{y:s,...}` since the source path is not retained.
  std::string Spec() const;

 private:
  using Rule = std::variant<AlternateSigns, HalfPlaneSigns, StripSigns,
                            RandomSigns, ExplicitSigns>;
  explicit Environment(Rule rule) : rule_(std::move(rule)) {}
  Rule rule_;
};

/// (1/N) Σ_{y=-N..N} ε_y. N >= 1, else std::invalid_argument.
double BalanceStatistic(const Environment& env, std::int64_t n);

/// Parses `alternate`, `halfplane`, `strip:<l>`, `random:<seed>` or
/// `explicit:<path>`. Throws std::invalid_argument on malformed specs.
Environment ParseEnvironment(std::string_view spec);

/// Reads a two-column `y sign` text file. Blank lines and `#` comments are
/// skipped.
std::map<std::int64_t, int> ReadSignTable(const std::filesystem::path& path);

}  // namespace orientwalk
