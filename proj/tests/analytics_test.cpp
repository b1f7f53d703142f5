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

#include "orientwalk/analytics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "orientwalk/env.hpp"
#include "orientwalk/kernels.hpp"
#include "orientwalk/parallel.hpp"
#include "orientwalk/rng.hpp"

namespace orientwalk {
namespace {

constexpr double kPi = std::numbers::pi;
const SpectralParams kDefault;

// --- series oracles ---------------------------------------------------------

// E e^{iθξ} for ξ ~ Geom(p) on {0, 1, ...}, summed term by term.
Complex ChiSeries(double p, double theta) {
  const double q = 1.0 - p;
  Complex sum = 0.0;
  double weight = p;
  for (int k = 0; k < 400; ++k) {
    sum += weight * std::polar(1.0, k * theta);
    weight *= q;
  }
  return sum;
}

// Simple-walk first-return probabilities f_{2k}, k >= 1.
std::vector<double> FirstReturnWeights(int terms) {
  std::vector<double> f(static_cast<std::size_t>(terms) + 1, 0.0);
  double c = 0.5;  // C_{k-1} / 2^{2k-1} with C the Catalan numbers
  for (int k = 1; k <= terms; ++k) {
    f[static_cast<std::size_t>(k)] = c;
    // C_k / 2^{2k+1} = C_{k-1} / 2^{2k-1} * (2(2k-1)/(k+1)) / 4
    c *= 2.0 * (2.0 * k - 1.0) / (k + 1.0) / 4.0;
  }
  return f;
}

// On the alternating lattice an excursion of 2k skeleton steps spends k waits
// on each sign, so the epoch law is Σ_k f_{2k} |χ|^{2k}.
double CharLSeries(double p, double theta, std::uint64_t n) {
  const double r2 = std::norm(ChiSeries(p, theta));
  const auto f = FirstReturnWeights(200'000);
  double one = 0.0, power = 1.0;
  for (std::size_t k = 1; k < f.size(); ++k) {
    power *= r2;
    one += f[k] * power;
  }
  return std::pow(one, static_cast<double>(n));
}

// On the half-plane an upward excursion of 2k steps waits 2k times on +1
// levels; a downward one waits once at level 0 and 2k - 1 times on -1 levels.
Complex GHSeries(double p, double theta) {
  const Complex chi = ChiSeries(p, theta);
  const Complex bar = std::conj(chi);
  const auto f = FirstReturnWeights(200'000);
  Complex up_pow = 1.0, down_pow = chi / bar;  // χ^{2k}, χ χ̄^{2k-1}
  Complex sum = 0.0;
  for (std::size_t k = 1; k < f.size(); ++k) {
    up_pow *= chi * chi;
    down_pow *= bar * bar;
    sum += 0.5 * f[k] * (up_pow + down_pow);
  }
  return sum;
}

// --- spectral building blocks ----------------------------------------------

TEST(SpectralTest, RejectsBadP) {
  EXPECT_THROW(SpectralParams(0.0), std::invalid_argument);
  EXPECT_THROW(SpectralParams(1.0), std::invalid_argument);
  EXPECT_THROW(SpectralParams(-0.5), std::invalid_argument);
  EXPECT_DOUBLE_EQ(kDefault.p(), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(kDefault.q(), 1.0 / 3.0);
}

TEST(SpectralTest, ChiMatchesGeometricSeries) {
  for (const double p : {0.25, 0.5, 2.0 / 3.0, 0.9}) {
    const SpectralParams params(p);
    for (double theta = -kPi; theta <= kPi; theta += 0.1) {
      const Complex series = ChiSeries(p, theta);
      EXPECT_NEAR(std::abs(Chi(params, theta) - series), 0.0, 1e-14);
      EXPECT_NEAR(std::abs(1.0 - series - OneMinusChi(params, theta)), 0.0,
                  1e-14);
      EXPECT_NEAR(ModulusR(params, theta), std::abs(series), 1e-14);
      EXPECT_NEAR(AngleAlpha(params, theta), std::arg(series), 1e-14);
    }
  }
}

TEST(SpectralTest, OneMinusChiIsAccurateNearZero) {
  // 1 - χ(θ) ≈ -iθ q/p for small θ, with full relative accuracy.
  const Complex v = OneMinusChi(kDefault, 1e-12);
  EXPECT_NEAR(v.imag() / (-1e-12 * 0.5), 1.0, 1e-9);
}

TEST(FirstReturnGfTest, ValuesAndDomain) {
  EXPECT_DOUBLE_EQ(FirstReturnGf(0.0), 0.0);
  EXPECT_DOUBLE_EQ(FirstReturnGf(1.0), 1.0);
  const auto f = FirstReturnWeights(2000);
  double series = 0.0;
  for (std::size_t k = 1; k < f.size(); ++k) series += f[k] * std::pow(0.6, 2.0 * k);
  EXPECT_NEAR(FirstReturnGf(0.6), series, 1e-14);
  EXPECT_NEAR(FirstReturnGf(0.6), 0.2, 1e-15);
  EXPECT_THROW(FirstReturnGf(1.5), std::domain_error);
  // P(σ_1 = 2) = 1/2 is the leading coefficient.
  EXPECT_NEAR(FirstReturnGf(1e-4) / 1e-8, 0.5, 1e-6);
}

// --- alternating lattice ----------------------------------------------------

TEST(CharLTest, Examples) {
  EXPECT_DOUBLE_EQ(CharL(kDefault, 0.0, 7), 1.0);
  EXPECT_DOUBLE_EQ(CharL(kDefault, 1.3, 0), 1.0);
  // r(π)² = p² / (p² + 4q) = 1/4, so char_L(π, 1) = 1 - √(3/4).
  EXPECT_NEAR(CharL(kDefault, kPi, 1), 1.0 - std::sqrt(0.75), 1e-14);
}

TEST(CharLTest, MatchesExcursionSeries) {
  for (const double theta : {0.3, 0.5, 1.0, 2.0, kPi}) {
    for (const std::uint64_t n : {1u, 3u, 10u}) {
      EXPECT_NEAR(CharL(kDefault, theta, n), CharLSeries(2.0 / 3.0, theta, n),
                  1e-12)
          << theta << " " << n;
    }
  }
}

TEST(ReturnProbLTest, SecondReturnIsOneSixth) {
  const auto r = ReturnProbL(kDefault, 2, QuadratureSpec{1e-12});
  EXPECT_NEAR(r.value, 1.0 / 6.0, 1e-10);
  EXPECT_THROW(ReturnProbL(kDefault, 0), std::invalid_argument);
}

TEST(ReturnProbLTest, FirstReturnByDirectSum) {
  // P(X_{σ1} = 0) = Σ_k f_{2k} P(A_k = B_k) with A_k, B_k independent sums of
  // k Geom(p) waits, so P(A_k = B_k) = Σ_j NB_k(j)².
  const double p = 2.0 / 3.0, q = 1.0 / 3.0;
  constexpr int kTerms = 1000;
  const auto f = FirstReturnWeights(kTerms);
  double total = 0.0;
  for (int k = 1; k <= kTerms; ++k) {
    double pmf = std::pow(p, k);  // NB_k(0)
    double same = 0.0;
    for (int j = 0; j < 4000; ++j) {
      same += pmf * pmf;
      pmf *= q * (j + k) / (j + 1.0);
    }
    total += f[static_cast<std::size_t>(k)] * same;
  }
  // Omitted terms are O(k^{-2}) each, about 1e-4 in total.
  const double value = ReturnProbL(kDefault, 1, QuadratureSpec{1e-12}).value;
  EXPECT_GT(value, total);
  EXPECT_LT(value, total + 2e-4);
}

TEST(ReturnProbLTest, DecreasesAndScalesLikeOneOverN) {
  double previous = 1.0;
  for (std::uint64_t n = 1; n <= 4096; n *= 2) {
    const double v = ReturnProbL(kDefault, n).value;
    EXPECT_LT(v, previous);
    previous = v;
  }
  const double b = 2.0 / (kPi * std::sqrt(3.0));
  EXPECT_NEAR(10'000 * ReturnProbL(kDefault, 10'000).value, b, 2e-3);
}

TEST(GreenSumLTest, AgreesWithTermwiseSum) {
  double sum = 0.0;
  for (std::uint64_t n = 1; n <= 50; ++n) {
    sum += ReturnProbL(kDefault, n, QuadratureSpec{1e-12}).value;
  }
  EXPECT_NEAR(GreenSumL(kDefault, 50, QuadratureSpec{1e-12}).value, sum, 1e-9);
}

TEST(GreenSumLTest, GrowsLogarithmically) {
  const double b = 2.0 / (kPi * std::sqrt(3.0));
  EXPECT_NEAR(b, 0.36755, 1e-5);
  const double lo = GreenSumL(kDefault, 100'000).value;
  const double hi = GreenSumL(kDefault, 1'000'000).value;
  EXPECT_NEAR((hi - lo) / std::log(10.0), b, 0.01 * b);
}

TEST(GreenCutoffLTest, DivergesLikeLogCutoff) {
  const double a = GreenCutoffL(kDefault, 1e-4).value;
  const double c = GreenCutoffL(kDefault, 1e-6).value;
  // 1/gap ~ p/(√q θ), so the slope in log(1/ε) is p/(π√q) = 2/(π√3).
  EXPECT_NEAR((c - a) / std::log(100.0), 2.0 / (kPi * std::sqrt(3.0)), 1e-4);
  EXPECT_THROW(GreenCutoffL(kDefault, 0.0), std::invalid_argument);
  EXPECT_THROW(GreenCutoffL(kDefault, 4.0), std::invalid_argument);
}

// --- half-plane -------------------------------------------------------------

TEST(GHTest, MatchesExcursionSeries) {
  for (const double p : {0.5, 2.0 / 3.0}) {
    const SpectralParams params(p);
    for (const double theta : {0.5, 1.0, 2.0, 3.0, -0.7}) {
      const Complex series = GHSeries(p, theta);
      EXPECT_NEAR(std::abs(GH(params, theta) - series), 0.0, 1e-12)
          << p << " " << theta;
    }
  }
}

TEST(GHTest, ModulusBelowOneAwayFromZero) {
  for (double theta = 0.01; theta <= kPi; theta += 0.01) {
    EXPECT_LT(std::abs(GH(kDefault, theta)), 1.0);
  }
}

TEST(GHTest, LimitRatioIsRootQOverP) {
  for (const double p : {0.3, 0.5, 2.0 / 3.0}) {
    const SpectralParams params(p);
    const double expected = std::sqrt((1.0 - p) / p);
    const Complex ratio = GHLimitRatio(params, 1e-10);
    EXPECT_NEAR(std::abs(ratio), expected, 1e-4) << p;
  }
  EXPECT_NEAR(std::abs(GHLimitRatio(kDefault, 1e-12)), 1.0 / std::sqrt(2.0),
              1e-5);
  EXPECT_THROW(GHLimitRatio(kDefault, 0.0), std::domain_error);
}

TEST(GHTest, MonteCarloRejectsRadiusScaledVariant) {
  // E e^{iθ X_{σ1}} on the half-plane at θ = 0.5 from 2·10⁵ epochs.
  constexpr std::uint64_t kTrials = 200'000;
  const double theta = 0.5;
  std::vector<double> re(kTrials), im(kTrials);
  ForEachTrial(kTrials, Execution::kParallel, [&](std::uint64_t t) {
    const auto out = kernels::RunToSkeletonReturn(HalfPlaneSigns{},
                                                  TritStream(404, t), 1,
                                                  1'000'000);
    re[t] = out.censored ? 0.0 : std::cos(theta * static_cast<double>(out.x));
    im[t] = out.censored ? 0.0 : std::sin(theta * static_cast<double>(out.x));
  });
  double mr = 0.0, mi = 0.0;
  for (std::uint64_t t = 0; t < kTrials; ++t) {
    mr += re[t];
    mi += im[t];
  }
  const Complex mc(mr / kTrials, mi / kTrials);
  const double band = 4.0 / std::sqrt(static_cast<double>(kTrials));
  const Complex g = GH(kDefault, theta);
  EXPECT_LT(std::abs(mc - g), band);
  const Complex scaled = ModulusR(kDefault, theta) * g;
  EXPECT_GT(std::abs(mc - scaled), 3.0 * band);
}

TEST(GreenSumHTest, ConvergesAsCutoffShrinks) {
  const double a = GreenSumH(kDefault, 1e-6, QuadratureSpec{1e-10}).value;
  const double b = GreenSumH(kDefault, 1e-8, QuadratureSpec{1e-10}).value;
  const double c = GreenSumH(kDefault, 1e-10, QuadratureSpec{1e-10}).value;
  EXPECT_LT(std::abs(c - b), std::abs(b - a));
  // The integrand is O(θ^{-1/2}), so the missing mass is O(√ε).
  EXPECT_LT(std::abs(c - b), 3.0 * std::sqrt(1e-8));
  EXPECT_TRUE(std::isfinite(c));
}

TEST(GreenSumHTest, ToleranceStable) {
  const double loose = GreenSumH(kDefault, 1e-6, QuadratureSpec{1e-8}).value;
  const double tight = GreenSumH(kDefault, 1e-6, QuadratureSpec{1e-10}).value;
  EXPECT_NEAR(loose, tight, 1e-7 * std::abs(tight));
}

TEST(GreenSumHTest, IntegrandSingularityIsHalfPower) {
  // √θ · Re[χ/(1-g)] → Re[1/(√(q/p) e^{iφ})] stays bounded and nonzero.
  const double a = std::sqrt(1e-8) * GreenSumHIntegrand(kDefault, 1e-8);
  const double b = std::sqrt(1e-10) * GreenSumHIntegrand(kDefault, 1e-10);
  EXPECT_GT(a, 0.1);
  EXPECT_NEAR(a, b, 1e-3);
}

}  // namespace
}  // namespace orientwalk
