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

// Monte Carlo estimators over many independent trajectories.
//
// Trial t draws its moves from TritStream(seed, t). With
// resample_environment set, trial t runs on env.ForTrial(t) (a fresh
// environment for random lattices); otherwise every trial shares `env`.
//
// Every result is a pure function of its arguments: the execution mode only
// changes how trials are scheduled, never the numbers.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orientwalk/analytics.hpp"
#include "orientwalk/env.hpp"
#include "orientwalk/parallel.hpp"
#include "orientwalk/stats.hpp"

namespace orientwalk {

struct MomentParams {
  double m1 = 0.0;
  double m2 = 0.0;
  double s2 = 0.0;
};

/// Moments of the geometric run law P(ξ = l) = p q^l:
/// m1 = q/p, m2 = q(1+q)/p², s2 = q/p².
MomentParams DefaultMoments(const SpectralParams& params);

inline constexpr std::uint64_t kDefaultStepCap = 10'000'000;

struct EstimatorOptions {
  Execution execution = Execution::kSerial;
  /// Chain steps per trajectory before it is censored.
  std::uint64_t step_cap = kDefaultStepCap;
  bool resample_environment = false;
};

/// One output row: `quantity,n,estimate,stderr,censored_fraction`.
struct EstimateRow {
  std::string quantity;
  std::uint64_t n = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double censored_fraction = 0.0;
};

struct EstimateTable {
  std::vector<EstimateRow> rows;
  std::vector<std::string> warnings;
};

// --- Δ scaling --------------------------------------------------------------

struct DeltaScalingResult {
  /// ln E|Δ_n| against ln n.
  LinearFit fit;
  std::vector<std::uint64_t> grid;
  std::vector<MeanEstimate> mean_abs_delta;
  double censored_fraction = 0.0;
  EstimateTable table;
};

/// Skeleton indices n in `grid` must be ascending, >= 5 points, spanning at
/// least 1.5 decades; otherwise std::invalid_argument explains why. Fewer
/// than 100 trials adds a power warning.
DeltaScalingResult DeltaScaling(const Environment& env,
                                std::span<const std::uint64_t> grid,
                                std::uint64_t trials, std::uint64_t seed,
                                const EstimatorOptions& options = {});

// --- speed ------------------------------------------------------------------

struct SpeedPoint {
  std::uint64_t n = 0;
  MeanEstimate abs_x_over_n;       // |X_n| / n
  MeanEstimate abs_centered_over_n;  // |X_n - m1 Δ_n| / n
  MeanEstimate centered;           // X_n - m1 Δ_n
  double variance_ratio = 0.0;     // Var(X_n - m1 Δ_n) / n
  double variance_ratio_se = 0.0;
  double censored_fraction = 0.0;
};

struct SpeedResult {
  std::vector<SpeedPoint> points;
  EstimateTable table;
};

SpeedResult SpeedEstimate(const Environment& env,
                          std::span<const std::uint64_t> grid,
                          std::uint64_t trials, std::uint64_t seed,
                          const MomentParams& moments = {0.5, 0.5, 0.75},
                          const EstimatorOptions& options = {});

// --- fluctuations -----------------------------------------------------------

/// Per-trajectory statistics over the first 2n skeleton steps.
struct FluctuationReport {
  std::uint64_t n = 0;
  std::int64_t max_abs_y = 0;     // max_{k <= 2n} |Y_k|
  std::uint32_t max_eta = 0;      // max_y η_{2n-1}(y)
  std::int64_t abs_delta = 0;     // |Δ_{2n}|
  std::array<double, 3> thresholds{};  // n^{1/2 + δ_i}
  bool a1 = false;                // max |Y| < d_{n,1}
  bool a2 = false;                // max η < d_{n,2}
  bool b = false;                 // |Δ| > d_{n,3}
  bool censored = false;
};

struct FluctuationPoint {
  std::uint64_t n = 0;
  MeanEstimate a1_complement;  // frequency of A_{n,1}^c
  MeanEstimate a2_complement;  // frequency of A_{n,2}^c
  MeanEstimate b;              // frequency of B_n
  MeanEstimate max_abs_y;
  MeanEstimate max_eta;
  MeanEstimate abs_delta;
  double censored_fraction = 0.0;
};

struct FluctuationResult {
  std::vector<FluctuationPoint> points;
  EstimateTable table;
};

/// deltas = (δ₁, δ₂, δ₃), each > 0. Censored trajectories are dropped from
/// the frequencies and counted in censored_fraction.
FluctuationResult FluctuationDiagnostics(const Environment& env,
                                         std::span<const std::uint64_t> grid,
                                         std::uint64_t trials,
                                         std::array<double, 3> deltas,
                                         std::uint64_t seed,
                                         const EstimatorOptions& options = {});

// --- ℍ occupation identity --------------------------------------------------

struct HIdentityResult {
  std::uint64_t n = 0;
  /// Σ_y ε_y η_{σ_n - 1}(y) from the half-plane chain.
  std::vector<double> chain_sample;
  /// Σ_k ρ_k (τ_k - 1) + n from independent first-return times and signs.
  std::vector<double> resampled;
  double chain_censored_fraction = 0.0;
  double resampled_censored_fraction = 0.0;
  TwoSampleResult test;
  /// Fractions strictly above and strictly below n; equal in law by symmetry.
  MeanEstimate chain_above, chain_below;
  MeanEstimate resampled_above, resampled_below;
  EstimateTable table;
};

/// Draws `samples` values on each side, drops censored ones, and runs the
/// permutation KS test at significance `alpha`. The resampled side censors a
/// draw when Σ τ_k exceeds the step cap.
HIdentityResult HIdentityTest(std::uint64_t n, std::uint64_t samples,
                              std::uint64_t seed, double alpha = 1e-3,
                              std::uint64_t permutations = 1999,
                              const EstimatorOptions& options = {});

// --- origin-visit census ----------------------------------------------------

struct VisitCensusResult {
  std::vector<std::uint64_t> budgets;
  std::uint64_t environments = 1;
  /// Mean origin visits within each budget (time 0 included), pooled.
  std::vector<MeanEstimate> ensemble;
  /// per_environment[e][b].
  std::vector<std::vector<MeanEstimate>> per_environment;
  EstimateTable table;
};

/// Visits to (0,0) within each step budget. For random environments,
/// `environments` quenched realizations env.ForTrial(e) each run `trials`
/// trajectories; deterministic lattices use a single environment.
VisitCensusResult VisitCensus(const Environment& env,
                              std::span<const std::uint64_t> budgets,
                              std::uint64_t trials, std::uint64_t environments,
                              std::uint64_t seed,
                              const EstimatorOptions& options = {});

// --- epoch statistics -------------------------------------------------------

struct EpochResult {
  std::uint64_t n = 0;
  double theta = 0.0;
  MeanEstimate cos_theta_x;   // E cos(θ X_{σ_n})
  MeanEstimate sin_theta_x;   // E sin(θ X_{σ_n})
  MeanEstimate zero;          // P(X_{σ_n} = 0)
  MeanEstimate signed_occupation_abs;  // E |Σ_y ε_y η_{σ_n - 1}(y)|
  double censored_fraction = 0.0;
  EstimateTable table;
};

/// Statistics of X at the n-th skeleton return. Censored trajectories
/// contribute 0 to every mean, so each estimate is biased by at most the
/// censored fraction.
EpochResult EpochStatistics(const Environment& env, std::uint64_t n,
                            double theta, std::uint64_t trials,
                            std::uint64_t seed,
                            const EstimatorOptions& options = {});

}  // namespace orientwalk
