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

#include "orientwalk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "orientwalk/rng.hpp"

namespace orientwalk {

MeanEstimate MeanAndStdError(std::span<const double> values) {
  MeanEstimate est;
  est.count = values.size();
  if (values.empty()) return est;
  double sum = 0.0;
  for (const double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  est.std_error =
      std::sqrt(SampleVariance(values) / static_cast<double>(values.size()));
  return est;
}

double SampleVariance(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  double sum = 0.0;
  for (const double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

namespace {

LinearFit Fit(std::span<const double> x, std::span<const double> y,
              std::span<const double> weights) {
  if (x.size() != y.size() || x.size() != weights.size()) {
    throw std::invalid_argument("regression inputs differ in length");
  }
  if (x.size() < 2) throw std::invalid_argument("regression needs >= 2 points");
  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += weights[i];
    sx += weights[i] * x[i];
    sy += weights[i] * y[i];
  }
  const double mx = sx / sw;
  const double my = sy / sw;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += weights[i] * dx * dx;
    sxy += weights[i] * dx * dy;
    syy += weights[i] * dy * dy;
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("regression x values coincide");
  LinearFit fit;
  fit.points = x.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    rss += weights[i] * r * r;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - rss / syy, 0.0, 1.0) : 1.0;
  fit.slope_std_error =
      x.size() > 2
          ? std::sqrt(rss / static_cast<double>(x.size() - 2) / sxx)
          : 0.0;
  return fit;
}

}  // namespace

LinearFit FitLine(std::span<const double> x, std::span<const double> y) {
  const std::vector<double> ones(x.size(), 1.0);
  return Fit(x, y, ones);
}

LinearFit FitLineWeighted(std::span<const double> x, std::span<const double> y,
                          std::span<const double> sigma) {
  std::vector<double> weights(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!(sigma[i] > 0.0)) {
      throw std::invalid_argument("weighted regression needs sigma > 0");
    }
    weights[i] = 1.0 / (sigma[i] * sigma[i]);
  }
  LinearFit fit = Fit(x, y, weights);
  double sw = 0.0, sx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sw += weights[i];
    sx += weights[i] * x[i];
  }
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += weights[i] * (x[i] - sx / sw) * (x[i] - sx / sw);
  }
  fit.slope_std_error = std::sqrt(1.0 / sxx);
  return fit;
}

double ChiSquareUpperTail(double statistic, double dof) {
  if (!(dof > 0.0)) throw std::invalid_argument("chi-square needs dof > 0");
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * statistic);
}

ChiSquareResult ChiSquareCounts(std::span<const std::uint64_t> observed,
                                std::span<const double> probabilities) {
  if (observed.size() != probabilities.size() || observed.size() < 2) {
    throw std::invalid_argument("chi-square needs >= 2 matching categories");
  }
  const double total = static_cast<double>(
      std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}));
  ChiSquareResult result;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * probabilities[i];
    const double d = static_cast<double>(observed[i]) - expected;
    result.statistic += d * d / expected;
  }
  result.bins = observed.size();
  result.dof = static_cast<double>(observed.size() - 1);
  result.p_value = ChiSquareUpperTail(result.statistic, result.dof);
  return result;
}

ChiSquareResult ChiSquareGoodnessOfFit(std::span<const std::uint64_t> samples,
                                       double (*pmf)(std::uint64_t, double),
                                       double law_param,
                                       std::size_t fitted_params,
                                       double min_expected) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  const double n = static_cast<double>(samples.size());
  // Cells 0..K-1 with expected >= min_expected, then the tail [K, inf).
  std::vector<double> probs;
  double cumulative = 0.0;
  for (std::uint64_t k = 0;; ++k) {
    const double pk = pmf(k, law_param);
    if (n * pk < min_expected || n * (1.0 - cumulative - pk) < min_expected) {
      break;
    }
    probs.push_back(pk);
    cumulative += pk;
  }
  probs.push_back(1.0 - cumulative);
  const std::size_t tail = probs.size() - 1;
  std::vector<std::uint64_t> observed(probs.size(), 0);
  for (const auto s : samples) ++observed[std::min<std::uint64_t>(s, tail)];
  ChiSquareResult result = ChiSquareCounts(observed, probs);
  result.dof -= static_cast<double>(fitted_params);
  if (!(result.dof > 0.0)) {
    throw std::invalid_argument("not enough cells for the chi-square test");
  }
  result.p_value = ChiSquareUpperTail(result.statistic, result.dof);
  return result;
}

namespace {

// KS distance for a labelling of the pooled sorted sample; `group_end[i]`
// marks the last element of a run of equal values.
double LabelledDistance(const std::vector<std::uint8_t>& is_a,
                        const std::vector<std::uint8_t>& group_end,
                        double n_a, double n_b) {
  double seen_a = 0.0, seen_b = 0.0, best = 0.0;
  for (std::size_t i = 0; i < is_a.size(); ++i) {
    if (is_a[i]) {
      seen_a += 1.0;
    } else {
      seen_b += 1.0;
    }
    if (group_end[i]) {
      best = std::max(best, std::abs(seen_a / n_a - seen_b / n_b));
    }
  }
  return best;
}

struct Pooled {
  std::vector<std::uint8_t> is_a;
  std::vector<std::uint8_t> group_end;
};

Pooled Pool(std::span<const double> a, std::span<const double> b) {
  std::vector<std::pair<double, std::uint8_t>> pooled;
  pooled.reserve(a.size() + b.size());
  for (const double v : a) pooled.emplace_back(v, 1);
  for (const double v : b) pooled.emplace_back(v, 0);
  std::sort(pooled.begin(), pooled.end());
  Pooled out;
  out.is_a.resize(pooled.size());
  out.group_end.resize(pooled.size());
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    out.is_a[i] = pooled[i].second;
    out.group_end[i] =
        i + 1 == pooled.size() || pooled[i + 1].first != pooled[i].first;
  }
  return out;
}

}  // namespace

double KolmogorovSmirnovDistance(std::span<const double> a,
                                 std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
  const Pooled pooled = Pool(a, b);
  return LabelledDistance(pooled.is_a, pooled.group_end,
                          static_cast<double>(a.size()),
                          static_cast<double>(b.size()));
}

TwoSampleResult KolmogorovSmirnovPermutation(std::span<const double> a,
                                             std::span<const double> b,
                                             std::uint64_t permutations,
                                             std::uint64_t seed,
                                             double alpha) {
  if (a.empty() || b.empty()) throw std::invalid_argument("empty sample");
  Pooled pooled = Pool(a, b);
  const auto n_a = static_cast<double>(a.size());
  const auto n_b = static_cast<double>(b.size());
  TwoSampleResult result;
  result.statistic =
      LabelledDistance(pooled.is_a, pooled.group_end, n_a, n_b);
  result.permutations = permutations;

  WordReader rng(CounterStream(DeriveKey(seed, Domain::kPermutation), 0));
  std::vector<std::uint8_t> labels = pooled.is_a;
  std::uint64_t at_least = 0;
  // Tolerance guards against rounding in equal fractions.
  const double threshold = result.statistic - 1e-12;
  for (std::uint64_t p = 0; p < permutations; ++p) {
    for (std::size_t i = labels.size() - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(rng.NextBelow(i + 1));
      std::swap(labels[i], labels[j]);
    }
    if (LabelledDistance(labels, pooled.group_end, n_a, n_b) >= threshold) {
      ++at_least;
    }
  }
  result.p_value = static_cast<double>(at_least + 1) /
                   static_cast<double>(permutations + 1);
  result.passed = result.p_value > alpha;
  return result;
}

}  // namespace orientwalk
