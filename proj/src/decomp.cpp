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

#include "orientwalk/decomp.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace orientwalk {

std::vector<std::int8_t> ExtractIncrements(const Trajectory& trajectory) {
  std::vector<std::int8_t> out;
  out.reserve(trajectory.moves.size());
  for (const Move m : trajectory.moves) {
    out.push_back(m == Move::kUp ? 1 : m == Move::kDown ? -1 : 0);
  }
  return out;
}

Decomposition Decompose(std::span<const std::int8_t> psi_tilde) {
  Decomposition d;
  std::uint64_t run = 0;
  for (const std::int8_t v : psi_tilde) {
    if (v == 0) {
      ++run;
    } else if (v == 1 || v == -1) {
      d.xi_tilde.push_back(run);
      d.psi.push_back(v);
      run = 0;
    } else {
      throw std::invalid_argument("vertical increments must be in {-1,0,1}");
    }
  }
  if (run > 0) d.xi_tilde.push_back(run);
  d.alpha = !d.xi_tilde.empty() && d.xi_tilde.front() > 0;
  return d;
}

void ValidateDecomposition(const Decomposition& d) {
  for (const auto v : d.psi) {
    if (v != 1 && v != -1) {
      throw std::invalid_argument("skeleton increments must be +1 or -1");
    }
  }
  const std::size_t m = d.psi.size();
  const std::size_t w = d.xi_tilde.size();
  if (m > 0 && w < m) {
    throw std::invalid_argument("missing waiting times: " + std::to_string(w) +
                                " for " + std::to_string(m) +
                                " skeleton steps");
  }
  if (w > m + 1) {
    throw std::invalid_argument("too many waiting times: " +
                                std::to_string(w) + " for " +
                                std::to_string(m) + " skeleton steps");
  }
  if (w == m + 1 && d.xi_tilde.back() == 0) {
    throw std::invalid_argument("trailing waiting time must be positive");
  }
  const bool leading = w > 0 && d.xi_tilde.front() > 0;
  if (d.alpha != leading) {
    throw std::invalid_argument("alpha flag disagrees with the leading block");
  }
}

std::vector<std::int8_t> Reconstruct(const Decomposition& d) {
  ValidateDecomposition(d);
  std::vector<std::int8_t> out;
  for (std::size_t j = 0; j <= d.psi.size(); ++j) {
    out.insert(out.end(), WaitAt(d, j), std::int8_t{0});
    if (j < d.psi.size()) out.push_back(d.psi[j]);
  }
  return out;
}

SkeletonView::SkeletonView(const Decomposition& d, const Environment& env) {
  ValidateDecomposition(d);
  const std::size_t m = d.psi.size();
  y_.reserve(m + 1);
  y_.push_back(0);
  for (const auto step : d.psi) y_.push_back(y_.back() + step);
  const auto [lo, hi] = std::minmax_element(y_.begin(), y_.end());
  min_level_ = *lo;
  max_level_ = *hi;

  const auto levels = static_cast<std::size_t>(max_level_ - min_level_ + 1);
  level_sign_.resize(levels);
  for (std::int64_t y = min_level_; y <= max_level_; ++y) {
    level_sign_[LevelIndex(y)] = env.Epsilon(y);
  }
  visit_times_.resize(levels);
  level_waits_.resize(levels);
  for (std::size_t k = 0; k <= m; ++k) {
    visit_times_[LevelIndex(y_[k])].push_back(k);
    level_waits_[LevelIndex(y_[k])].push_back(WaitAt(d, k));
    if (y_[k] == 0) sigma_.push_back(k);
  }

  // The n-th vertical move leaves level Y_{n-1} after consuming its next
  // unused wait ξ^{(y)}_i, i = η_{n-1}(y).
  t_.assign(m + 1, 0);
  x_.assign(m + 1, 0);
  delta_.assign(m + 1, 0);
  std::vector<std::size_t> consumed(levels, 0);
  for (std::size_t n = 1; n <= m; ++n) {
    const std::size_t level = LevelIndex(y_[n - 1]);
    const std::uint64_t wait = level_waits_[level][consumed[level]++];
    const int sign = level_sign_[level];
    t_[n] = t_[n - 1] + 1 + wait;
    x_[n] = x_[n - 1] + sign * static_cast<std::int64_t>(wait);
    delta_[n] = delta_[n - 1] + sign;
  }
}

std::uint64_t SkeletonView::Occupation(std::uint64_t n, std::int64_t y) const {
  if (n > steps()) throw std::out_of_range("occupation index past the view");
  if (y < min_level_ || y > max_level_) return 0;
  const auto& times = visit_times_[LevelIndex(y)];
  return static_cast<std::uint64_t>(
      std::upper_bound(times.begin(), times.end(), n) - times.begin());
}

std::uint64_t SkeletonView::TotalOccupation(std::uint64_t n) const {
  if (n == 0) return 0;
  std::uint64_t total = 0;
  for (std::int64_t y = min_level_; y <= max_level_; ++y) {
    total += Occupation(n - 1, y);
  }
  return total;
}

std::int64_t SkeletonView::SignedOccupation(std::uint64_t n) const {
  if (n == 0) return 0;
  std::int64_t total = 0;
  for (std::int64_t y = min_level_; y <= max_level_; ++y) {
    total += level_sign_[LevelIndex(y)] *
             static_cast<std::int64_t>(Occupation(n - 1, y));
  }
  return total;
}

std::span<const std::uint64_t> SkeletonView::LevelWaits(std::int64_t y) const {
  if (y < min_level_ || y > max_level_) return {};
  return level_waits_[LevelIndex(y)];
}

std::vector<std::int64_t> EmbeddedPositions(const Decomposition& d,
                                            const Environment& env) {
  const SkeletonView view(d, env);
  const auto x = view.embedded();
  return {x.begin(), x.end()};
}

std::optional<std::int64_t> AlternatingOccupationSum(const SkeletonView& view,
                                                     std::uint64_t n) {
  const auto sigma = view.returns();
  if (n >= sigma.size()) return std::nullopt;
  if (sigma[n] == 0) return 0;
  std::int64_t total = 0;
  for (std::int64_t y = view.min_level(); y <= view.max_level(); ++y) {
    const auto eta = static_cast<std::int64_t>(view.Occupation(sigma[n] - 1, y));
    total += (y & 1) ? -eta : eta;
  }
  return total;
}

StraddleCount StraddleReturnCount(const Trajectory& trajectory,
                                  const Environment& env) {
  const Decomposition d = Decompose(ExtractIncrements(trajectory));
  const SkeletonView view(d, env);
  const int eps0 = env.Epsilon(0);
  const auto sigma = view.returns();
  const auto times = view.vertical_times();
  const auto x = view.embedded();
  const auto& positions = trajectory.positions;

  StraddleCount count;
  count.returns = OriginVisits(trajectory) - 1;
  for (std::size_t j = 1; j < sigma.size(); ++j) {
    const std::uint64_t s = sigma[j];
    const std::int64_t x0 = x[s];
    const auto z = static_cast<std::int64_t>(WaitAt(d, s));
    const bool straddled = eps0 > 0 ? (x0 <= 0 && 0 <= x0 + z)
                                    : (x0 - z <= 0 && 0 <= x0);
    const std::uint64_t begin = times[s];
    const std::uint64_t end =
        j + 1 < sigma.size() ? times[sigma[j + 1]] : positions.size();
    bool visited = false;
    for (std::uint64_t k = begin; k < end && !visited; ++k) {
      visited = positions[k] == LatticeState{};
    }
    count.visited.push_back(visited);
    count.straddled.push_back(straddled);
    count.straddles += straddled;
  }
  return count;
}

void WriteDecompositionCsv(std::ostream& out, const Decomposition& d) {
  out << "index,psi,xi_tilde\n";
  for (std::size_t j = 0; j <= d.psi.size(); ++j) {
    out << j << ',';
    if (j > 0) out << static_cast<int>(d.psi[j - 1]);
    out << ',';
    if (j < d.xi_tilde.size()) out << d.xi_tilde[j];
    out << '\n';
  }
}

}  // namespace orientwalk
