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

// Small statistics toolkit for the Monte Carlo estimators. Sums run in input
// order so results are reproducible bit for bit.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace orientwalk {

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t count = 0;
};

MeanEstimate MeanAndStdError(std::span<const double> values);

/// Unbiased sample variance; 0 for fewer than two values.
double SampleVariance(std::span<const double> values);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double slope_std_error = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares y = intercept + slope * x. Needs >= 2 points with
/// distinct x, else std::invalid_argument. The slope error comes from the
/// residual variance (0 for 2 points).
LinearFit FitLine(std::span<const double> x, std::span<const double> y);

/// Weighted least squares with known per-point standard deviations; the slope
/// error is the propagated one, sqrt(1 / S_xx^w). R² is the weighted one.
LinearFit FitLineWeighted(std::span<const double> x, std::span<const double> y,
                          std::span<const double> sigma);

struct ChiSquareResult {
  double statistic = 0.0;
  double dof = 0.0;
  double p_value = 1.0;
  std::size_t bins = 0;
};

/// P(χ²_dof >= statistic).
double ChiSquareUpperTail(double statistic, double dof);

/// Pearson goodness of fit of integer-valued samples against a law on
/// {0, 1, 2, ...} given by `pmf(k)`. Cells with expected count < min_expected
/// are merged into an open upper tail. dof = cells - 1 - fitted_params.
ChiSquareResult ChiSquareGoodnessOfFit(std::span<const std::uint64_t> samples,
                                       double (*pmf)(std::uint64_t, double),
                                       double law_param,
                                       std::size_t fitted_params = 0,
                                       double min_expected = 5.0);

/// Same with observed counts per category and category probabilities
/// (summing to 1).
ChiSquareResult ChiSquareCounts(std::span<const std::uint64_t> observed,
                                std::span<const double> probabilities);

struct TwoSampleResult {
  double statistic = 0.0;  // Kolmogorov-Smirnov D
  double p_value = 1.0;
  std::uint64_t permutations = 0;
  bool passed = true;      // p_value > alpha
};

/// Two-sample Kolmogorov-Smirnov test calibrated by label permutation rather
/// than asymptotic critical values, so heavy tails and ties are handled
/// exactly. p = (1 + #{D_perm >= D}) / (permutations + 1). Deterministic in
/// `seed`.
TwoSampleResult KolmogorovSmirnovPermutation(std::span<const double> a,
                                             std::span<const double> b,
                                             std::uint64_t permutations,
                                             std::uint64_t seed, double alpha);

/// Plain KS distance between the empirical laws of a and b.
double KolmogorovSmirnovDistance(std::span<const double> a,
                                 std::span<const double> b);

}  // namespace orientwalk
