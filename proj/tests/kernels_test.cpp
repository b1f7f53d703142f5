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

// The streaming kernels are checked against the recorded walk plus the
// decomposition, which serve as the serial reference.

#include "orientwalk/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "orientwalk/decomp.hpp"
#include "orientwalk/parallel.hpp"
#include "orientwalk/stats.hpp"
#include "orientwalk/walk.hpp"

namespace orientwalk {
namespace {

const Environment kLattices[] = {
    Environment::Alternate(), Environment::HalfPlane(), Environment::Strip(3),
    Environment::RandomIid(14)};

TEST(CachedSignsTest, AgreesWithRule) {
  const RandomSigns rule{99};
  auto cached = kernels::MakeLookup(rule);
  // Walk outward in both directions to force several regrowths.
  for (std::int64_t r = 0; r < 5000; ++r) {
    ASSERT_EQ(cached(r), rule(r));
    ASSERT_EQ(cached(-r), rule(-r));
  }
  for (std::int64_t y = -5000; y < 5000; y += 7) ASSERT_EQ(cached(y), rule(y));
  EXPECT_EQ(cached(1'000'000), rule(1'000'000));
}

TEST(RunToReturnTest, MatchesDecomposition) {
  constexpr std::uint64_t kSteps = 20'000;
  for (const Environment& env : kLattices) {
    for (std::uint64_t s = 0; s < 30; ++s) {
      const Trajectory t = Simulate(env, kSteps, 60, s);
      const SkeletonView v(Decompose(ExtractIncrements(t)), env);
      for (std::uint64_t n = 1; n <= 4; ++n) {
        const auto out = env.Visit([&](const auto& rule) {
          return kernels::RunToSkeletonReturn(kernels::MakeLookup(rule),
                                              TritStream(60, s), n, kSteps);
        });
        if (n < v.returns().size()) {
          const std::uint64_t k = v.returns()[n];
          ASSERT_FALSE(out.censored);
          ASSERT_EQ(out.x, v.embedded()[k]);
          ASSERT_EQ(out.signed_occupation, v.delta()[k]);
          ASSERT_EQ(out.chain_steps, v.vertical_times()[k]);
        } else {
          ASSERT_TRUE(out.censored);
          ASSERT_EQ(out.chain_steps, kSteps);
          ASSERT_EQ(out.x, t.positions.back().x);
        }
      }
    }
  }
}

TEST(RunToReturnTest, ZeroReturnsIsOrigin) {
  const auto out = kernels::RunToSkeletonReturn(AlternateSigns{},
                                                TritStream(1, 0), 0, 100);
  EXPECT_EQ(out.x, 0);
  EXPECT_EQ(out.chain_steps, 0u);
  EXPECT_FALSE(out.censored);
}

TEST(CountOriginVisitsTest, MatchesRecordedWalk) {
  const std::vector<std::uint64_t> budgets{0, 10, 1000, 5000, 20'000};
  for (const Environment& env : kLattices) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      std::vector<std::uint64_t> visits(budgets.size());
      env.Visit([&](const auto& rule) {
        kernels::CountOriginVisits(kernels::MakeLookup(rule), TritStream(61, s),
                                   budgets, visits);
      });
      const Trajectory t = Simulate(env, budgets.back(), 61, s);
      for (std::size_t b = 0; b < budgets.size(); ++b) {
        Trajectory prefix;
        prefix.positions.assign(t.positions.begin(),
                                t.positions.begin() + budgets[b] + 1);
        ASSERT_EQ(visits[b], OriginVisits(prefix)) << "budget " << budgets[b];
      }
    }
  }
}

TEST(TrackSkeletonTest, SnapshotsMatchDecomposition) {
  const std::vector<std::uint64_t> grid{1, 2, 5, 50, 400, 400, 3000};
  constexpr std::uint64_t kSteps = 50'000;
  for (const Environment& env : kLattices) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      std::vector<kernels::SkeletonSnapshot> snaps(grid.size());
      env.Visit([&](const auto& rule) {
        kernels::TrackSkeleton(kernels::MakeLookup(rule), TritStream(62, s),
                               grid, kSteps, true, snaps);
      });
      const SkeletonView v(Decompose(ExtractIncrements(Simulate(env, kSteps, 62, s))),
                           env);
      for (std::size_t g = 0; g < grid.size(); ++g) {
        const std::uint64_t n = grid[g];
        if (n > v.steps()) {
          ASSERT_TRUE(snaps[g].censored);
          continue;
        }
        ASSERT_FALSE(snaps[g].censored);
        EXPECT_EQ(snaps[g].n, n);
        EXPECT_EQ(snaps[g].x, v.embedded()[n]);
        EXPECT_EQ(snaps[g].y, v.levels()[n]);
        EXPECT_EQ(snaps[g].delta, v.delta()[n]);
        EXPECT_EQ(snaps[g].chain_steps, v.vertical_times()[n]);
        std::int64_t max_abs = 0;
        std::uint64_t max_occ = 0;
        for (std::uint64_t k = 0; k <= n; ++k) {
          max_abs = std::max<std::int64_t>(max_abs, std::abs(v.levels()[k]));
        }
        for (std::int64_t y = v.min_level(); y <= v.max_level(); ++y) {
          max_occ = std::max(max_occ, v.Occupation(n - 1, y));
        }
        EXPECT_EQ(snaps[g].max_abs_y, max_abs);
        EXPECT_EQ(snaps[g].max_occupation, max_occ);
      }
    }
  }
}

TEST(TrackSkeletonTest, CapCensorsRemainingPoints) {
  const std::vector<std::uint64_t> grid{1, 1'000'000};
  std::vector<kernels::SkeletonSnapshot> snaps(grid.size());
  kernels::TrackSkeleton(HalfPlaneSigns{}, TritStream(3, 0), grid, 1000, false,
                         snaps);
  EXPECT_FALSE(snaps[0].censored);
  EXPECT_TRUE(snaps[1].censored);
  EXPECT_EQ(snaps[1].chain_steps, 1000u);
  EXPECT_EQ(snaps[1].max_occupation, 0u);
}

// First return of simple random walk: P(τ = 2k + 2) = C_k / 2^{2k+1}.
double FirstReturnPmf(std::uint64_t k, double) {
  double c = 1.0;  // Catalan C_k
  for (std::uint64_t j = 1; j <= k; ++j) {
    c = c * 2.0 * static_cast<double>(2 * j - 1) / static_cast<double>(j + 1);
  }
  return c / std::ldexp(1.0, static_cast<int>(2 * k + 1));
}

TEST(SampleFirstReturnTest, CatalanLaw) {
  WordReader bits(CounterStream(DeriveKey(5, Domain::kSkeleton), 0));
  std::vector<std::uint64_t> half_times;
  for (int i = 0; i < 100'000; ++i) {
    const std::uint64_t tau = kernels::SampleFirstReturn(bits, 1'000'000);
    if (tau == 0) continue;
    ASSERT_EQ(tau % 2, 0u);
    half_times.push_back(tau / 2 - 1);
  }
  EXPECT_GT(half_times.size(), 99'000u);
  const ChiSquareResult chi = ChiSquareGoodnessOfFit(half_times, FirstReturnPmf, 0.0);
  EXPECT_GT(chi.p_value, 1e-3) << chi.statistic;
}

TEST(SampleFirstReturnTest, CapReturnsZero) {
  WordReader bits(CounterStream(DeriveKey(6, Domain::kSkeleton), 0));
  int censored = 0;
  for (int i = 0; i < 1000; ++i) censored += kernels::SampleFirstReturn(bits, 1) == 0;
  // A return needs at least two steps.
  EXPECT_EQ(censored, 1000);
}

TEST(ForEachTrialTest, SerialAndParallelAgree) {
  constexpr std::uint64_t kTrials = 500;
  auto run = [&](Execution exec) {
    std::vector<kernels::EpochOutcome> slots(kTrials);
    ForEachTrial(kTrials, exec, [&](std::uint64_t t) {
      slots[t] = kernels::RunToSkeletonReturn(AlternateSigns{}, TritStream(8, t),
                                              2, 100'000);
    });
    return slots;
  };
  SetThreadCount(4);
  const auto serial = run(Execution::kSerial);
  const auto parallel = run(Execution::kParallel);
  for (std::uint64_t t = 0; t < kTrials; ++t) {
    ASSERT_EQ(serial[t].x, parallel[t].x);
    ASSERT_EQ(serial[t].chain_steps, parallel[t].chain_steps);
    ASSERT_EQ(serial[t].censored, parallel[t].censored);
  }
}

TEST(ForEachTrialTest, ParallelRethrows) {
  SetThreadCount(4);
  EXPECT_THROW(ForEachTrial(100, Execution::kParallel,
                            [](std::uint64_t t) {
                              if (t == 37) throw std::runtime_error("trial 37");
                            }),
               std::runtime_error);
}

}  // namespace
}  // namespace orientwalk
