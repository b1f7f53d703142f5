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

#include "orientwalk/rng.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "orientwalk/stats.hpp"

namespace orientwalk {
namespace {

// Known-answer vectors published with the reference Philox implementation.
TEST(PhiloxTest, KnownAnswers) {
  using C = Philox4x32::Counter;
  using K = Philox4x32::Key;
  EXPECT_EQ(Philox4x32::Apply(C{0, 0, 0, 0}, K{0, 0}),
            (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::Apply(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                              K{0xffffffff, 0xffffffff}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::Apply(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                              K{0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(PhiloxTest, ApplyIsConstexpr) {
  constexpr auto out = Philox4x32::Apply({0, 0, 0, 0}, {0, 0});
  static_assert(out[0] == 0x6627e8d5u);
  SUCCEED();
}

TEST(DeriveKeyTest, DomainsAndSeedsSeparate) {
  std::set<std::uint64_t> keys;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (const Domain d : {Domain::kMoves, Domain::kEnvironment,
                           Domain::kSkeleton, Domain::kRademacher,
                           Domain::kPermutation, Domain::kTestData}) {
      keys.insert(DeriveKey(seed, d));
    }
  }
  EXPECT_EQ(keys.size(), 600u);
}

TEST(CounterStreamTest, WordIsRandomAccess) {
  const CounterStream s(12345, 7);
  WordReader reader(s);
  for (std::uint64_t i = 0; i < 100; ++i) EXPECT_EQ(reader.Next(), s.Word(i));
}

TEST(CounterStreamTest, StreamsDiffer) {
  const CounterStream a(1, 0), b(1, 1), c(2, 0);
  EXPECT_NE(a.Word(0), b.Word(0));
  EXPECT_NE(a.Word(0), c.Word(0));
}

TEST(WordReaderTest, NextBelowStaysInRange) {
  WordReader r(CounterStream(9, 0));
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull, 1ull << 40}) {
    for (int i = 0; i < 1000; ++i) EXPECT_LT(r.NextBelow(bound), bound);
  }
}

TEST(WordReaderTest, NextBelowIsUniform) {
  WordReader r(CounterStream(10, 0));
  std::vector<std::uint64_t> counts(7, 0);
  for (int i = 0; i < 70'000; ++i) ++counts[r.NextBelow(7)];
  const std::vector<double> probs(7, 1.0 / 7.0);
  EXPECT_GT(ChiSquareCounts(counts, probs).p_value, 1e-3);
}

TEST(WordReaderTest, UniformInUnitInterval) {
  WordReader r(CounterStream(11, 0));
  double sum = 0.0;
  for (int i = 0; i < 100'000; ++i) {
    const double u = r.NextUniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // sd of the mean = sqrt(1/12 / 1e5)
  EXPECT_NEAR(sum / 1e5, 0.5, 3.0 * std::sqrt(1.0 / 12.0 / 1e5));
}

TEST(WordReaderTest, BitsAreBalanced) {
  WordReader r(CounterStream(12, 0));
  int ones = 0;
  constexpr int kBits = 1'000'000;
  for (int i = 0; i < kBits; ++i) ones += r.NextBit();
  EXPECT_NEAR(ones / double(kBits), 0.5, 3.0 * std::sqrt(0.25 / kBits));
}

TEST(TritStreamTest, SequentialMatchesRandomAccess) {
  TritStream seq(42, 3);
  const TritStream ra(42, 3);
  for (std::uint64_t i = 0; i < 1000; ++i) ASSERT_EQ(seq.Next(), ra.At(i));
}

TEST(TritStreamTest, DigitsAreUniform) {
  TritStream t(5, 0);
  std::vector<std::uint64_t> counts(3, 0);
  for (int i = 0; i < 300'000; ++i) ++counts[static_cast<std::size_t>(t.Next())];
  const std::vector<double> probs(3, 1.0 / 3.0);
  EXPECT_GT(ChiSquareCounts(counts, probs).p_value, 1e-3);
}

TEST(TritStreamTest, ConsecutivePairsAreUniform) {
  // Digits inside one word must not be correlated.
  TritStream t(6, 0);
  std::vector<std::uint64_t> counts(9, 0);
  for (int i = 0; i < 180'000; ++i) {
    const int a = t.Next();
    const int b = t.Next();
    ++counts[static_cast<std::size_t>(3 * a + b)];
  }
  const std::vector<double> probs(9, 1.0 / 9.0);
  EXPECT_GT(ChiSquareCounts(counts, probs).p_value, 1e-3);
}

}  // namespace
}  // namespace orientwalk
