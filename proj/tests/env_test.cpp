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

#include "orientwalk/env.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "orientwalk/rng.hpp"

namespace orientwalk {
namespace {

Environment Figure4() {
  return Environment::Explicit({{-2, -1}, {-1, 1}, {0, -1}, {1, 1}});
}

TEST(EnvTest, SpecExamples) {
  EXPECT_EQ(Environment::Alternate().Epsilon(0), 1);
  EXPECT_EQ(Environment::Alternate().Epsilon(3), -1);
  EXPECT_EQ(Environment::HalfPlane().Epsilon(-1), -1);
  EXPECT_EQ(Figure4().Epsilon(-2), -1);
}

TEST(EnvTest, ClosedFormsOnWideRange) {
  const Environment alt = Environment::Alternate();
  const Environment half = Environment::HalfPlane();
  for (std::int64_t y = -10'000; y <= 10'000; ++y) {
    ASSERT_EQ(alt.Epsilon(y), std::pow(-1.0, static_cast<double>(y)));
    ASSERT_EQ(half.Epsilon(y), y >= 0 ? 1 : -1);
  }
}

TEST(EnvTest, StripBandsAlternateFromPositiveZero) {
  for (const std::int64_t width : {1, 2, 3, 7}) {
    const Environment strip = Environment::Strip(width);
    for (std::int64_t y = -10'000; y <= 10'000; ++y) {
      const auto band = static_cast<std::int64_t>(
          std::floor(static_cast<double>(y) / static_cast<double>(width)));
      ASSERT_EQ(strip.Epsilon(y), band % 2 == 0 ? 1 : -1)
          << "width " << width << " y " << y;
    }
  }
  // Width 1 coincides with the alternate lattice.
  for (std::int64_t y = -50; y <= 50; ++y) {
    EXPECT_EQ(Environment::Strip(1).Epsilon(y),
              Environment::Alternate().Epsilon(y));
  }
}

TEST(EnvTest, StripRejectsBadWidth) {
  EXPECT_THROW(Environment::Strip(0), std::invalid_argument);
  EXPECT_THROW(Environment::Strip(-2), std::invalid_argument);
}

TEST(EnvTest, RandomIsPure) {
  const Environment env = Environment::RandomIid(77);
  WordReader r(CounterStream(DeriveKey(1, Domain::kTestData), 0));
  for (int i = 0; i < 10'000; ++i) {
    const auto y = static_cast<std::int64_t>(r.NextBelow(2'000'001)) - 1'000'000;
    ASSERT_EQ(env.Epsilon(y), env.Epsilon(y));
    ASSERT_EQ(env.Epsilon(y), Environment::RandomIid(77).Epsilon(y));
  }
}

TEST(EnvTest, RandomFrequencyIsBalanced) {
  const Environment env = Environment::RandomIid(2026);
  std::int64_t plus = 0;
  constexpr std::int64_t kN = 1'000'000;
  for (std::int64_t y = 0; y < kN; ++y) plus += env.Epsilon(y) == 1;
  EXPECT_NEAR(static_cast<double>(plus) / kN, 0.5, 3.0 * std::sqrt(0.25 / kN));
}

TEST(EnvTest, RandomSeedsLookIndependent) {
  const Environment a = Environment::RandomIid(1);
  const Environment b = Environment::RandomIid(2);
  std::int64_t agree = 0;
  constexpr std::int64_t kN = 100'000;
  for (std::int64_t y = 0; y < kN; ++y) agree += a.Epsilon(y) == b.Epsilon(y);
  EXPECT_NEAR(static_cast<double>(agree) / kN, 0.5, 4.0 * std::sqrt(0.25 / kN));
}

TEST(EnvTest, ExplicitMissingOrdinateIsRangeError) {
  EXPECT_THROW(Figure4().Epsilon(5), std::out_of_range);
}

TEST(EnvTest, ExplicitRejectsBadSigns) {
  EXPECT_THROW(Environment::Explicit({{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Environment::Explicit({{0, 0}}), std::invalid_argument);
}

TEST(EnvTest, OrdinateOverflowIsRangeError) {
  const std::int64_t big = kCoordinateLimit;
  EXPECT_THROW(Environment::Alternate().Epsilon(big), std::out_of_range);
  EXPECT_THROW(Environment::HalfPlane().Epsilon(-big), std::out_of_range);
  EXPECT_NO_THROW(Environment::Alternate().Epsilon(big - 1));
}

TEST(BalanceTest, Examples) {
  EXPECT_DOUBLE_EQ(BalanceStatistic(Environment::Alternate(), 10), 0.1);
  EXPECT_DOUBLE_EQ(BalanceStatistic(Environment::HalfPlane(), 10), 0.1);
  EXPECT_THROW(BalanceStatistic(Environment::Alternate(), 0),
               std::invalid_argument);
}

TEST(BalanceTest, RandomEnvironmentsBalance) {
  int within = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    within += std::abs(BalanceStatistic(Environment::RandomIid(seed),
                                        1'000'000)) < 5e-3;
  }
  EXPECT_GE(within, 99);
}

TEST(ParseTest, AllSpecForms) {
  EXPECT_EQ(ParseEnvironment("alternate").kind(),
            Environment::Kind::kAlternate);
  EXPECT_EQ(ParseEnvironment("halfplane").kind(),
            Environment::Kind::kHalfPlane);
  EXPECT_EQ(ParseEnvironment("strip:3").Epsilon(3), -1);
  EXPECT_EQ(ParseEnvironment("random:9").Epsilon(10),
            Environment::RandomIid(9).Epsilon(10));
  EXPECT_THROW(ParseEnvironment("strip:0"), std::invalid_argument);
  EXPECT_THROW(ParseEnvironment("strip:x"), std::invalid_argument);
  EXPECT_THROW(ParseEnvironment("random:"), std::invalid_argument);
  EXPECT_THROW(ParseEnvironment("spiral"), std::invalid_argument);
}

TEST(ParseTest, ExplicitFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "orientwalk_env_test.txt";
  {
    std::ofstream f(path);
    f << "# figure 4 rows\n-2 -1\n-1 +1\n\n0 -1\n1 1\n";
  }
  const Environment env = ParseEnvironment("explicit:" + path.string());
  EXPECT_EQ(env.Epsilon(-2), -1);
  EXPECT_EQ(env.Epsilon(-1), 1);
  EXPECT_EQ(env.Epsilon(0), -1);
  EXPECT_EQ(env.Epsilon(1), 1);
  {
    std::ofstream f(path);
    f << "0 3\n";
  }
  EXPECT_THROW(ParseEnvironment("explicit:" + path.string()),
               std::invalid_argument);
  std::filesystem::remove(path);
  EXPECT_ANY_THROW(ParseEnvironment("explicit:" + path.string()));
}

TEST(EnvTest, ForTrialResamplesOnlyRandom) {
  const Environment alt = Environment::Alternate();
  EXPECT_EQ(alt.ForTrial(5).Spec(), alt.Spec());
  const Environment r = Environment::RandomIid(3);
  EXPECT_NE(r.ForTrial(0).Spec(), r.ForTrial(1).Spec());
  EXPECT_EQ(r.ForTrial(4).Spec(), r.ForTrial(4).Spec());
}

TEST(EnvTest, SpecRoundTrips) {
  for (const char* spec : {"alternate", "halfplane", "strip:5", "random:11"}) {
    EXPECT_EQ(ParseEnvironment(spec).Spec(), spec);
  }
}

}  // namespace
}  // namespace orientwalk
