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

#include "orientwalk/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "orientwalk/kernels.hpp"
#include "orientwalk/rng.hpp"

namespace orientwalk {

namespace {

// Calls fn with the sign lookup for `env`.
template <class Fn>
decltype(auto) WithSigns(const Environment& env, Fn&& fn) {
  return env.Visit(
      [&](const auto& rule) { return fn(kernels::MakeLookup(rule)); });
}

Environment TrialEnvironment(const Environment& env, std::uint64_t trial,
                             const EstimatorOptions& options) {
  return options.resample_environment ? env.ForTrial(trial) : env;
}

void CheckTrials(std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
}

void CheckGrid(std::span<const std::uint64_t> grid, const char* what) {
  if (grid.empty()) {
    throw std::invalid_argument(std::string(what) + " grid is empty");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0 || (i > 0 && grid[i] <= grid[i - 1])) {
      throw std::invalid_argument(std::string(what) +
                                  " grid must be strictly ascending and >= 1");
    }
  }
}

double Fraction(std::uint64_t part, std::uint64_t whole) {
  return whole == 0 ? 0.0
                    : static_cast<double>(part) / static_cast<double>(whole);
}

void AddRow(EstimateTable& table, std::string quantity, std::uint64_t n,
            const MeanEstimate& est, double censored) {
  table.rows.push_back({std::move(quantity), n, est.mean, est.std_error,
                        censored});
}

void AddRow(EstimateTable& table, std::string quantity, std::uint64_t n,
            double value, double std_error, double censored) {
  table.rows.push_back({std::move(quantity), n, value, std_error, censored});
}

void WarnOnCensoring(EstimateTable& table, double fraction,
                     const std::string& where) {
  if (fraction > 0.0) {
    std::ostringstream msg;
    msg << where << ": censored fraction " << fraction
        << " (trajectories hit the step cap)";
    table.warnings.push_back(msg.str());
  }
}

// Grid of skeleton snapshots for one trajectory.
std::vector<kernels::SkeletonSnapshot> Snapshots(
    const Environment& env, std::span<const std::uint64_t> grid,
    std::uint64_t seed, std::uint64_t trial, std::uint64_t cap,
    bool track_occupation) {
  std::vector<kernels::SkeletonSnapshot> snaps(grid.size());
  WithSigns(env, [&](auto signs) {
    kernels::TrackSkeleton(signs, TritStream(seed, trial), grid, cap,
                           track_occupation, std::span(snaps));
  });
  return snaps;
}

}  // namespace

MomentParams DefaultMoments(const SpectralParams& params) {
  const double p = params.p();
  const double q = params.q();
  return {q / p, q * (1.0 + q) / (p * p), q / (p * p)};
}

DeltaScalingResult DeltaScaling(const Environment& env,
                                std::span<const std::uint64_t> grid,
                                std::uint64_t trials, std::uint64_t seed,
                                const EstimatorOptions& options) {
  CheckTrials(trials);
  CheckGrid(grid, "delta-scaling");
  if (grid.size() < 5) {
    throw std::invalid_argument(
        "delta-scaling needs at least 5 grid points; got " +
        std::to_string(grid.size()));
  }
  const double decades = std::log10(static_cast<double>(grid.back()) /
                                    static_cast<double>(grid.front()));
  if (decades < 1.5) {
    std::ostringstream msg;
    msg << "delta-scaling grid spans " << decades
        << " decades; at least 1.5 are required";
    throw std::invalid_argument(msg.str());
  }

  std::vector<std::vector<kernels::SkeletonSnapshot>> slots(trials);
  ForEachTrial(trials, options.execution, [&](std::uint64_t t) {
    slots[t] = Snapshots(TrialEnvironment(env, t, options), grid, seed, t,
                         options.step_cap, false);
  });

  DeltaScalingResult result;
  result.grid.assign(grid.begin(), grid.end());
  std::uint64_t censored = 0;
  std::vector<double> log_n, log_mean;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<double> values;
    values.reserve(trials);
    std::uint64_t censored_here = 0;
    for (const auto& snaps : slots) {
      if (snaps[g].censored) {
        ++censored_here;
        continue;
      }
      values.push_back(static_cast<double>(std::abs(snaps[g].delta)));
    }
    censored = std::max(censored, censored_here);
    const MeanEstimate est = MeanAndStdError(values);
    result.mean_abs_delta.push_back(est);
    AddRow(result.table, "mean_abs_delta", grid[g], est,
           Fraction(censored_here, trials));
    if (est.mean > 0.0) {
      log_n.push_back(std::log(static_cast<double>(grid[g])));
      log_mean.push_back(std::log(est.mean));
    }
  }
  result.censored_fraction = Fraction(censored, trials);
  if (log_n.size() < 2) {
    throw std::invalid_argument(
        "delta-scaling: E|delta| vanished on the grid; no exponent to fit");
  }
  result.fit = FitLine(log_n, log_mean);
  AddRow(result.table, "delta_exponent", grid.back(), result.fit.slope,
         result.fit.slope_std_error, result.censored_fraction);
  AddRow(result.table, "delta_intercept", grid.back(), result.fit.intercept,
         0.0, result.censored_fraction);
  AddRow(result.table, "delta_fit_r2", grid.back(), result.fit.r_squared, 0.0,
         result.censored_fraction);
  if (trials < 100) {
    result.table.warnings.push_back(
        "delta-scaling: fewer than 100 trials; the exponent estimate has low "
        "statistical power");
  }
  WarnOnCensoring(result.table, result.censored_fraction, "delta-scaling");
  return result;
}

SpeedResult SpeedEstimate(const Environment& env,
                          std::span<const std::uint64_t> grid,
                          std::uint64_t trials, std::uint64_t seed,
                          const MomentParams& moments,
                          const EstimatorOptions& options) {
  CheckTrials(trials);
  CheckGrid(grid, "speed");
  std::vector<std::vector<kernels::SkeletonSnapshot>> slots(trials);
  ForEachTrial(trials, options.execution, [&](std::uint64_t t) {
    slots[t] = Snapshots(TrialEnvironment(env, t, options), grid, seed, t,
                         options.step_cap, false);
  });

  SpeedResult result;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const auto n = static_cast<double>(grid[g]);
    std::vector<double> abs_x, abs_c, centered;
    std::uint64_t censored = 0;
    for (const auto& snaps : slots) {
      const auto& s = snaps[g];
      if (s.censored) {
        ++censored;
        continue;
      }
      const double c = static_cast<double>(s.x) -
                       moments.m1 * static_cast<double>(s.delta);
      abs_x.push_back(std::abs(static_cast<double>(s.x)) / n);
      abs_c.push_back(std::abs(c) / n);
      centered.push_back(c);
    }
    SpeedPoint point;
    point.n = grid[g];
    point.abs_x_over_n = MeanAndStdError(abs_x);
    point.abs_centered_over_n = MeanAndStdError(abs_c);
    point.centered = MeanAndStdError(centered);
    point.censored_fraction = Fraction(censored, trials);
    if (centered.size() >= 2) {
      const double var = SampleVariance(centered);
      double m4 = 0.0;
      for (const double c : centered) {
        const double d = c - point.centered.mean;
        m4 += d * d * d * d;
      }
      m4 /= static_cast<double>(centered.size());
      point.variance_ratio = var / n;
      point.variance_ratio_se =
          std::sqrt(std::max(0.0, m4 - var * var) /
                    static_cast<double>(centered.size())) /
          n;
    }
    AddRow(result.table, "mean_abs_x_over_n", point.n, point.abs_x_over_n,
           point.censored_fraction);
    AddRow(result.table, "mean_abs_x_minus_m1_delta_over_n", point.n,
           point.abs_centered_over_n, point.censored_fraction);
    AddRow(result.table, "mean_x_minus_m1_delta", point.n, point.centered,
           point.censored_fraction);
    AddRow(result.table, "var_x_minus_m1_delta_over_n", point.n,
           point.variance_ratio, point.variance_ratio_se,
           point.censored_fraction);
    WarnOnCensoring(result.table, point.censored_fraction,
                    "speed n=" + std::to_string(point.n));
    result.points.push_back(point);
  }
  return result;
}

FluctuationResult FluctuationDiagnostics(const Environment& env,
                                         std::span<const std::uint64_t> grid,
                                         std::uint64_t trials,
                                         std::array<double, 3> deltas,
                                         std::uint64_t seed,
                                         const EstimatorOptions& options) {
  CheckTrials(trials);
  CheckGrid(grid, "fluctuations");
  for (const double d : deltas) {
    if (!(d > 0.0)) throw std::invalid_argument("fluctuation deltas must be > 0");
  }
  std::vector<std::uint64_t> skeleton_grid;
  for (const auto n : grid) skeleton_grid.push_back(2 * n);

  std::vector<std::vector<FluctuationReport>> slots(trials);
  ForEachTrial(trials, options.execution, [&](std::uint64_t t) {
    const auto snaps = Snapshots(TrialEnvironment(env, t, options),
                                 skeleton_grid, seed, t, options.step_cap,
                                 true);
    auto& reports = slots[t];
    reports.resize(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
      FluctuationReport& r = reports[g];
      const auto& s = snaps[g];
      r.n = grid[g];
      r.max_abs_y = s.max_abs_y;
      r.max_eta = s.max_occupation;
      r.abs_delta = std::abs(s.delta);
      r.censored = s.censored;
      for (std::size_t i = 0; i < 3; ++i) {
        r.thresholds[i] =
            std::pow(static_cast<double>(grid[g]), 0.5 + deltas[i]);
      }
      r.a1 = static_cast<double>(r.max_abs_y) < r.thresholds[0];
      r.a2 = static_cast<double>(r.max_eta) < r.thresholds[1];
      r.b = static_cast<double>(r.abs_delta) > r.thresholds[2];
    }
  });

  FluctuationResult result;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    std::vector<double> a1c, a2c, b, my, me, ad;
    std::uint64_t censored = 0;
    for (const auto& reports : slots) {
      const auto& r = reports[g];
      if (r.censored) {
        ++censored;
        continue;
      }
      a1c.push_back(r.a1 ? 0.0 : 1.0);
      a2c.push_back(r.a2 ? 0.0 : 1.0);
      b.push_back(r.b ? 1.0 : 0.0);
      my.push_back(static_cast<double>(r.max_abs_y));
      me.push_back(static_cast<double>(r.max_eta));
      ad.push_back(static_cast<double>(r.abs_delta));
    }
    FluctuationPoint point;
    point.n = grid[g];
    point.a1_complement = MeanAndStdError(a1c);
    point.a2_complement = MeanAndStdError(a2c);
    point.b = MeanAndStdError(b);
    point.max_abs_y = MeanAndStdError(my);
    point.max_eta = MeanAndStdError(me);
    point.abs_delta = MeanAndStdError(ad);
    point.censored_fraction = Fraction(censored, trials);
    const double cf = point.censored_fraction;
    AddRow(result.table, "freq_a1_complement", point.n, point.a1_complement,
           cf);
    AddRow(result.table, "freq_a2_complement", point.n, point.a2_complement,
           cf);
    AddRow(result.table, "freq_b", point.n, point.b, cf);
    AddRow(result.table, "mean_max_abs_y", point.n, point.max_abs_y, cf);
    AddRow(result.table, "mean_max_eta", point.n, point.max_eta, cf);
    AddRow(result.table, "mean_abs_delta", point.n, point.abs_delta, cf);
    WarnOnCensoring(result.table, cf,
                    "fluctuations n=" + std::to_string(point.n));
    result.points.push_back(point);
  }
  return result;
}

HIdentityResult HIdentityTest(std::uint64_t n, std::uint64_t samples,
                              std::uint64_t seed, double alpha,
                              std::uint64_t permutations,
                              const EstimatorOptions& options) {
  if (n == 0) throw std::invalid_argument("h-identity needs n >= 1");
  CheckTrials(samples);
  if (permutations == 0) {
    throw std::invalid_argument("h-identity needs >= 1 permutation");
  }
  const std::uint64_t cap = options.step_cap;

  std::vector<kernels::EpochOutcome> chain(samples);
  ForEachTrial(samples, options.execution, [&](std::uint64_t t) {
    chain[t] = kernels::RunToSkeletonReturn(HalfPlaneSigns{},
                                            TritStream(seed, t), n, cap);
  });

  struct Draw {
    std::int64_t value = 0;
    bool censored = false;
  };
  std::vector<Draw> draws(samples);
  const std::uint64_t tau_key = DeriveKey(seed, Domain::kSkeleton);
  const std::uint64_t sign_key = DeriveKey(seed, Domain::kRademacher);
  ForEachTrial(samples, options.execution, [&](std::uint64_t t) {
    WordReader steps(CounterStream(tau_key, t));
    WordReader signs(CounterStream(sign_key, t));
    std::int64_t total = static_cast<std::int64_t>(n);
    std::uint64_t used = 0;
    for (std::uint64_t k = 0; k < n; ++k) {
      const std::uint64_t tau = kernels::SampleFirstReturn(steps, cap - used);
      if (tau == 0) {
        draws[t].censored = true;
        return;
      }
      used += tau;
      const auto excess = static_cast<std::int64_t>(tau - 1);
      total += signs.NextBit() ? excess : -excess;
    }
    draws[t].value = total;
  });

  HIdentityResult result;
  result.n = n;
  std::uint64_t chain_censored = 0, draw_censored = 0;
  for (const auto& c : chain) {
    if (c.censored) {
      ++chain_censored;
    } else {
      result.chain_sample.push_back(static_cast<double>(c.signed_occupation));
    }
  }
  for (const auto& d : draws) {
    if (d.censored) {
      ++draw_censored;
    } else {
      result.resampled.push_back(static_cast<double>(d.value));
    }
  }
  result.chain_censored_fraction = Fraction(chain_censored, samples);
  result.resampled_censored_fraction = Fraction(draw_censored, samples);
  if (result.chain_sample.empty() || result.resampled.empty()) {
    throw std::invalid_argument(
        "h-identity: every sample on one side was censored; raise the cap");
  }
  result.test = KolmogorovSmirnovPermutation(
      result.chain_sample, result.resampled, permutations,
      seed ^ static_cast<std::uint64_t>(n), alpha);

  const auto side = [&](const std::vector<double>& v, bool above) {
    std::vector<double> ind;
    ind.reserve(v.size());
    const auto centre = static_cast<double>(n);
    for (const double x : v) {
      ind.push_back((above ? x > centre : x < centre) ? 1.0 : 0.0);
    }
    return MeanAndStdError(ind);
  };
  result.chain_above = side(result.chain_sample, true);
  result.chain_below = side(result.chain_sample, false);
  result.resampled_above = side(result.resampled, true);
  result.resampled_below = side(result.resampled, false);

  const double cf = std::max(result.chain_censored_fraction,
                             result.resampled_censored_fraction);
  AddRow(result.table, "ks_statistic", n, result.test.statistic, 0.0, cf);
  AddRow(result.table, "ks_permutation_p_value", n, result.test.p_value, 0.0,
         cf);
  AddRow(result.table, "ks_passed", n, result.test.passed ? 1.0 : 0.0, 0.0,
         cf);
  AddRow(result.table, "chain_frac_above_n", n, result.chain_above,
         result.chain_censored_fraction);
  AddRow(result.table, "chain_frac_below_n", n, result.chain_below,
         result.chain_censored_fraction);
  AddRow(result.table, "resampled_frac_above_n", n, result.resampled_above,
         result.resampled_censored_fraction);
  AddRow(result.table, "resampled_frac_below_n", n, result.resampled_below,
         result.resampled_censored_fraction);
  WarnOnCensoring(result.table, result.chain_censored_fraction,
                  "h-identity chain sample");
  WarnOnCensoring(result.table, result.resampled_censored_fraction,
                  "h-identity resampled sample");
  return result;
}

VisitCensusResult VisitCensus(const Environment& env,
                              std::span<const std::uint64_t> budgets,
                              std::uint64_t trials, std::uint64_t environments,
                              std::uint64_t seed,
                              const EstimatorOptions& options) {
  CheckTrials(trials);
  CheckGrid(budgets, "visits");
  const bool random = env.kind() == Environment::Kind::kRandomIid;
  if (!random) environments = 1;
  if (environments == 0) {
    throw std::invalid_argument("visits needs >= 1 environment");
  }
  const std::uint64_t total = environments * trials;
  std::vector<std::vector<std::uint64_t>> slots(total);
  ForEachTrial(total, options.execution, [&](std::uint64_t i) {
    const std::uint64_t e = i / trials;
    const Environment trial_env =
        random && environments > 1 ? env.ForTrial(e) : env;
    slots[i].resize(budgets.size());
    WithSigns(trial_env, [&](auto signs) {
      kernels::CountOriginVisits(signs, TritStream(seed, i), budgets,
                                 std::span(slots[i]));
    });
  });

  VisitCensusResult result;
  result.budgets.assign(budgets.begin(), budgets.end());
  result.environments = environments;
  result.per_environment.resize(environments);
  for (std::size_t b = 0; b < budgets.size(); ++b) {
    std::vector<double> env_means;
    for (std::uint64_t e = 0; e < environments; ++e) {
      std::vector<double> values;
      for (std::uint64_t t = 0; t < trials; ++t) {
        values.push_back(static_cast<double>(slots[e * trials + t][b]));
      }
      const MeanEstimate est = MeanAndStdError(values);
      result.per_environment[e].push_back(est);
      env_means.push_back(est.mean);
    }
    MeanEstimate pooled;
    if (environments == 1) {
      pooled = result.per_environment[0][b];
    } else {
      // Environments are the independent units of a quenched ensemble.
      pooled = MeanAndStdError(env_means);
      pooled.count = total;
    }
    result.ensemble.push_back(pooled);
    AddRow(result.table, "mean_origin_visits", budgets[b], pooled, 0.0);
  }
  if (environments > 1) {
    for (std::uint64_t e = 0; e < environments; ++e) {
      for (std::size_t b = 0; b < budgets.size(); ++b) {
        AddRow(result.table, "env" + std::to_string(e) + "_mean_origin_visits",
               budgets[b], result.per_environment[e][b], 0.0);
      }
    }
  }
  if (trials < 100) {
    result.table.warnings.push_back(
        "visits: fewer than 100 trials per environment");
  }
  return result;
}

EpochResult EpochStatistics(const Environment& env, std::uint64_t n,
                            double theta, std::uint64_t trials,
                            std::uint64_t seed,
                            const EstimatorOptions& options) {
  if (n == 0) throw std::invalid_argument("epoch statistics need n >= 1");
  CheckTrials(trials);
  std::vector<kernels::EpochOutcome> slots(trials);
  ForEachTrial(trials, options.execution, [&](std::uint64_t t) {
    WithSigns(TrialEnvironment(env, t, options), [&](auto signs) {
      slots[t] = kernels::RunToSkeletonReturn(signs, TritStream(seed, t), n,
                                              options.step_cap);
    });
  });

  std::vector<double> c(trials), s(trials), z(trials), a(trials);
  std::uint64_t censored = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto& o = slots[t];
    if (o.censored) {
      ++censored;
      c[t] = s[t] = z[t] = a[t] = 0.0;
      continue;
    }
    const double phase = theta * static_cast<double>(o.x);
    c[t] = std::cos(phase);
    s[t] = std::sin(phase);
    z[t] = o.x == 0 ? 1.0 : 0.0;
    a[t] = static_cast<double>(std::abs(o.signed_occupation));
  }
  EpochResult result;
  result.n = n;
  result.theta = theta;
  result.cos_theta_x = MeanAndStdError(c);
  result.sin_theta_x = MeanAndStdError(s);
  result.zero = MeanAndStdError(z);
  result.signed_occupation_abs = MeanAndStdError(a);
  result.censored_fraction = Fraction(censored, trials);
  const double cf = result.censored_fraction;
  AddRow(result.table, "freq_x_zero_at_epoch", n, result.zero, cf);
  AddRow(result.table, "mean_cos_theta_x_at_epoch", n, result.cos_theta_x, cf);
  AddRow(result.table, "mean_sin_theta_x_at_epoch", n, result.sin_theta_x, cf);
  AddRow(result.table, "mean_abs_signed_occupation_at_epoch", n,
         result.signed_occupation_abs, cf);
  WarnOnCensoring(result.table, cf, "epoch");
  return result;
}

}  // namespace orientwalk
