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

#include "orientwalk/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "orientwalk/analytics.hpp"
#include "orientwalk/decomp.hpp"
#include "orientwalk/estimators.hpp"
#include "orientwalk/kernels.hpp"
#include "orientwalk/rng.hpp"
#include "orientwalk/stats.hpp"

namespace orientwalk {

namespace {

constexpr double kPi = std::numbers::pi;

class Recorder {
 public:
  Recorder(std::vector<CheckResult>& out, std::string suite)
      : out_(out), suite_(std::move(suite)) {}

  void Add(std::string name, bool passed, const std::string& detail) {
    out_.push_back({suite_, std::move(name), passed, detail});
  }

  // Runs `fn`, turning an escaped exception into a failed check.
  template <class Fn>
  void Run(const std::string& name, Fn&& fn) {
    try {
      fn(name);
    } catch (const std::exception& e) {
      Add(name, false, std::string("exception: ") + e.what());
    }
  }

 private:
  std::vector<CheckResult>& out_;
  std::string suite_;
};

template <class... Args>
std::string Detail(const Args&... args) {
  std::ostringstream s;
  s.precision(10);
  (s << ... << args);
  return s.str();
}

std::vector<std::int8_t> RandomIncrements(WordReader& rng, std::size_t length,
                                          bool skeleton_only) {
  std::vector<std::int8_t> out(length);
  for (auto& v : out) {
    v = skeleton_only ? (rng.NextBit() ? 1 : -1)
                      : static_cast<std::int8_t>(rng.NextBelow(3)) - 1;
  }
  return out;
}

// --- exact ------------------------------------------------------------------

void ExactSuite(Recorder& rec, Execution exec, std::uint64_t seed) {
  rec.Run("decomposition_round_trip", [&](const std::string& name) {
    constexpr std::uint64_t kCount = 10'000;
    std::vector<std::uint8_t> ok(kCount, 0);
    ForEachTrial(kCount, exec, [&](std::uint64_t t) {
      WordReader rng(CounterStream(DeriveKey(seed, Domain::kTestData), t));
      const auto length = static_cast<std::size_t>(rng.NextBelow(1001));
      const auto psi_tilde = RandomIncrements(rng, length, false);
      const Decomposition d = Decompose(psi_tilde);
      ok[t] = Reconstruct(d) == psi_tilde;
    });
    std::uint64_t failures = 0;
    for (const auto v : ok) failures += v ? 0 : 1;
    rec.Add(name, failures == 0, Detail(failures, " failures in ", kCount));
  });

  rec.Run("worked_example", [&](const std::string& name) {
    const Environment env = WorkedExampleEnvironment();
    const Trajectory traj = Replay(env, WorkedExampleMoves());
    const auto psi_tilde = ExtractIncrements(traj);
    const Decomposition d = Decompose(psi_tilde);
    const SkeletonView view(d, env);
    const std::vector<std::int8_t> psi{1, -1, -1, -1, 1, 1};
    const std::vector<std::uint64_t> xi{0, 2, 0, 0, 4, 3};
    const auto sigma = view.returns();
    const auto x = view.embedded();
    const bool pass = d.psi == psi && d.xi_tilde == xi && !d.alpha &&
                      sigma.size() == 3 && sigma[1] == 2 && sigma[2] == 6 &&
                      x[sigma[1]] == 2 && x[sigma[2]] == 1 &&
                      OriginVisits(traj) == 1 && view.delta()[6] == 0;
    rec.Add(name, pass,
            Detail("X_sigma1=", x[2], " X_sigma2=", x[6],
                   " origin_visits=", OriginVisits(traj)));
  });

  rec.Run("alternating_occupation_sum", [&](const std::string& name) {
    constexpr std::uint64_t kCount = 1000;
    std::vector<std::uint64_t> bad(kCount, 0), epochs(kCount, 0);
    const Environment alt = Environment::Alternate();
    ForEachTrial(kCount, exec, [&](std::uint64_t t) {
      WordReader rng(CounterStream(DeriveKey(seed + 1, Domain::kTestData), t));
      const auto psi = RandomIncrements(rng, 1000, true);
      const SkeletonView view(Decompose(psi), alt);
      for (std::uint64_t n = 1;; ++n) {
        const auto sum = AlternatingOccupationSum(view, n);
        if (!sum) break;
        ++epochs[t];
        bad[t] += *sum != 0;
      }
    });
    std::uint64_t failures = 0, total = 0;
    for (std::uint64_t t = 0; t < kCount; ++t) {
      failures += bad[t];
      total += epochs[t];
    }
    rec.Add(name, failures == 0,
            Detail(failures, " nonzero sums over ", total, " epochs"));
  });

  rec.Run("occupation_and_embedding", [&](const std::string& name) {
    const std::vector<Environment> envs{
        Environment::Alternate(), Environment::HalfPlane(),
        Environment::Strip(3), Environment::RandomIid(seed)};
    constexpr std::uint64_t kPerEnv = 100;
    const std::uint64_t count = kPerEnv * envs.size();
    std::vector<std::uint64_t> bad(count, 0);
    ForEachTrial(count, exec, [&](std::uint64_t i) {
      const Environment& env = envs[i / kPerEnv];
      const Trajectory traj = Simulate(env, 2000, seed, i);
      const SkeletonView view(Decompose(ExtractIncrements(traj)), env);
      const auto times = view.vertical_times();
      const auto x = view.embedded();
      const auto y = view.levels();
      for (std::uint64_t n = 1; n <= view.steps(); ++n) {
        bad[i] += view.TotalOccupation(n) != n;
        bad[i] += view.SignedOccupation(n) != view.delta()[n];
        bad[i] += traj.positions[times[n]] != LatticeState{x[n], y[n]};
      }
    });
    std::uint64_t failures = 0;
    for (const auto b : bad) failures += b;
    rec.Add(name, failures == 0,
            Detail(failures, " failures over ", count, " trajectories"));
  });

  rec.Run("straddle_identity", [&](const std::string& name) {
    constexpr std::uint64_t kCount = 1000;
    const Environment alt = Environment::Alternate();
    std::vector<std::uint64_t> bad(kCount, 0), returns(kCount, 0);
    ForEachTrial(kCount, exec, [&](std::uint64_t t) {
      const Trajectory traj = Simulate(alt, 10'000, seed + 2, t);
      const StraddleCount c = StraddleReturnCount(traj, alt);
      bad[t] += c.visited != c.straddled;
      bad[t] += c.returns != c.straddles;
      returns[t] = c.returns;
    });
    std::uint64_t failures = 0, total = 0;
    for (std::uint64_t t = 0; t < kCount; ++t) {
      failures += bad[t];
      total += returns[t];
    }
    rec.Add(name, failures == 0,
            Detail(failures, " mismatches; ", total, " returns checked"));
  });

  rec.Run("environment_closed_forms", [&](const std::string& name) {
    const Environment alt = Environment::Alternate();
    const Environment half = Environment::HalfPlane();
    const Environment strip = Environment::Strip(4);
    std::uint64_t failures = 0;
    for (std::int64_t y = -10'000; y <= 10'000; ++y) {
      failures += alt.Epsilon(y) != (y % 2 == 0 ? 1 : -1);
      failures += half.Epsilon(y) != (y >= 0 ? 1 : -1);
      const std::int64_t band =
          (y >= 0 ? y : y - 3) / 4;  // floor(y / 4)
      failures += strip.Epsilon(y) != (band % 2 == 0 ? 1 : -1);
    }
    rec.Add(name, failures == 0, Detail(failures, " mismatches"));
  });

  rec.Run("alternate_delta_vanishes_at_returns", [&](const std::string& name) {
    constexpr std::uint64_t kCount = 1000;
    std::vector<kernels::EpochOutcome> out(kCount);
    ForEachTrial(kCount, exec, [&](std::uint64_t t) {
      out[t] = kernels::RunToSkeletonReturn(AlternateSigns{},
                                            TritStream(seed + 3, t), 3,
                                            1'000'000);
    });
    std::uint64_t failures = 0, checked = 0;
    for (const auto& o : out) {
      if (o.censored) continue;
      ++checked;
      failures += o.signed_occupation != 0;
    }
    rec.Add(name, failures == 0,
            Detail(failures, " nonzero of ", checked, " epochs"));
  });
}

// --- analytic ---------------------------------------------------------------

void AnalyticSuite(Recorder& rec) {
  const SpectralParams params;

  rec.Run("closed_form_identities", [&](const std::string& name) {
    double worst = 0.0;
    bool bounded = true;
    for (int i = 1; i <= 10'000; ++i) {
      const double theta = kPi * i / 10'000.0;
      const Complex chi = Chi(params, theta);
      const double r = ModulusR(params, theta);
      const double a = AngleAlpha(params, theta);
      worst = std::max(worst, std::abs(r - std::abs(chi)));
      worst = std::max(worst, std::abs(std::polar(r, a) - chi));
      worst = std::max(worst, std::abs(Chi(params, -theta) - std::conj(chi)));
      worst = std::max(worst, std::abs(AngleAlpha(params, -theta) + a));
      worst = std::max(worst,
                       std::abs(CharL(params, -theta, 3) - CharL(params, theta, 3)));
      worst = std::max(worst, std::abs(GH(params, -theta) -
                                       std::conj(GH(params, theta))));
      bounded = bounded && r < 1.0 && std::abs(GH(params, theta)) < 1.0;
    }
    worst = std::max(worst, std::abs(GH(params, 0.0) - Complex(1.0, 0.0)));
    worst = std::max(worst, std::abs(ModulusR(params, kPi) - 0.5));
    worst = std::max(worst, std::abs(Chi(params, kPi) - Complex(0.5, 0.0)));
    rec.Add(name, worst < 1e-12 && bounded,
            Detail("max abs deviation ", worst, bounded ? "" : "; |r| or |g| >= 1"));
  });

  rec.Run("g_limit", [&](const std::string& name) {
    const double target = 1.0 / std::sqrt(2.0);
    double prev_err = 1e300;
    bool trend = true;
    double last = 0.0;
    for (const double theta : {1e-4, 1e-6, 1e-8}) {
      last = GHLimitRatio(params, theta).real();
      const double err = std::abs(last - target);
      trend = trend && err < prev_err;
      prev_err = err;
    }
    rec.Add(name, trend && prev_err / target < 0.01,
            Detail("ratio at 1e-8 = ", last, ", target ", target));
  });

  rec.Run("green_sum_L_log_growth", [&](const std::string& name) {
    std::vector<double> x, y;
    for (const std::uint64_t n : {100u, 1000u, 10'000u}) {
      x.push_back(std::log(static_cast<double>(n)));
      y.push_back(GreenSumL(params, n).value);
    }
    const LinearFit fit = FitLine(x, y);
    const double b = 2.0 / (kPi * std::sqrt(3.0));
    rec.Add(name,
            std::abs(fit.slope - b) < 0.05 * b && fit.r_squared > 0.99,
            Detail("slope ", fit.slope, " (expected ", b, "), R2 ",
                   fit.r_squared));
  });

  rec.Run("green_sum_H_cauchy", [&](const std::string& name) {
    const double a = GreenSumH(params, 1e-6).value;
    const double b = GreenSumH(params, 1e-8).value;
    rec.Add(name, std::abs(a - b) < 0.01 * std::abs(a),
            Detail("eps=1e-6: ", a, ", eps=1e-8: ", b));
  });

  rec.Run("return_prob_L_decreasing", [&](const std::string& name) {
    bool ok = true;
    double prev = 2.0;
    for (std::uint64_t n = 1; n <= 50; ++n) {
      const double v = ReturnProbL(params, n).value;
      ok = ok && v < prev && v > 0.0;
      prev = v;
    }
    rec.Add(name, ok, Detail("P(X_sigma_50 = 0) = ", prev));
  });

  rec.Run("return_prob_L_tail", [&](const std::string& name) {
    const double b = 2.0 / (kPi * std::sqrt(3.0));
    const double v = 10'000.0 * ReturnProbL(params, 10'000).value;
    rec.Add(name, std::abs(v - b) < 0.02 * b,
            Detail("n P = ", v, " (limit ", b, ")"));
  });
}

// --- Monte Carlo ------------------------------------------------------------

bool Within(double estimate, double expected, double se, double k = 3.0) {
  return std::abs(estimate - expected) <= k * se;
}

void MonteCarloSuite(Recorder& rec, Execution exec, std::uint64_t seed) {
  const SpectralParams params;
  EstimatorOptions options;
  options.execution = exec;
  options.step_cap = 1'000'000;

  rec.Run("char_L_at_third_return", [&](const std::string& name) {
    const EpochResult r = EpochStatistics(Environment::Alternate(), 3, 1.0,
                                          20'000, seed, options);
    const double expected = CharL(params, 1.0, 3);
    rec.Add(name, Within(r.cos_theta_x.mean, expected, r.cos_theta_x.std_error),
            Detail("mean cos = ", r.cos_theta_x.mean, " +- ",
                   r.cos_theta_x.std_error, ", closed form ", expected));
  });

  rec.Run("g_H_squared_at_second_return", [&](const std::string& name) {
    const EpochResult r = EpochStatistics(Environment::HalfPlane(), 2, 0.5,
                                          20'000, seed + 1, options);
    const Complex g2 = GH(params, 0.5) * GH(params, 0.5);
    const bool pass =
        Within(r.cos_theta_x.mean, g2.real(), r.cos_theta_x.std_error) &&
        Within(r.sin_theta_x.mean, g2.imag(), r.sin_theta_x.std_error);
    rec.Add(name, pass,
            Detail("E exp = (", r.cos_theta_x.mean, ", ", r.sin_theta_x.mean,
                   "), g^2 = (", g2.real(), ", ", g2.imag(), ")"));
  });

  rec.Run("return_prob_L_at_second_return", [&](const std::string& name) {
    const EpochResult r = EpochStatistics(Environment::Alternate(), 2, 0.0,
                                          20'000, seed + 2, options);
    const double expected = ReturnProbL(params, 2).value;
    rec.Add(name, Within(r.zero.mean, expected, r.zero.std_error),
            Detail("frequency ", r.zero.mean, " +- ", r.zero.std_error,
                   ", quadrature ", expected));
  });

  rec.Run("h_identity_n1", [&](const std::string& name) {
    const HIdentityResult r = HIdentityTest(1, 2000, seed + 3, 1e-3, 499, options);
    rec.Add(name, r.test.passed,
            Detail("D = ", r.test.statistic, ", p = ", r.test.p_value));
  });

  rec.Run("move_frequencies", [&](const std::string& name) {
    const WalkSummary s =
        SimulateStreaming(Environment::Alternate(), 300'000, seed + 4);
    const std::vector<std::uint64_t> counts{s.up, s.down, s.horizontal};
    const std::vector<double> probs(3, 1.0 / 3.0);
    const ChiSquareResult chi = ChiSquareCounts(counts, probs);
    rec.Add(name, chi.p_value > 1e-3,
            Detail("chi2 = ", chi.statistic, ", p = ", chi.p_value));
  });

  rec.Run("centered_embedding_mean", [&](const std::string& name) {
    const std::vector<std::uint64_t> grid{1000};
    const SpeedResult r =
        SpeedEstimate(Environment::RandomIid(seed), grid, 10'000, seed + 5,
                      DefaultMoments(params), options);
    const auto& p = r.points[0];
    rec.Add(name, Within(p.centered.mean, 0.0, p.centered.std_error),
            Detail("mean X - m1 Delta = ", p.centered.mean, " +- ",
                   p.centered.std_error));
  });
}

}  // namespace

VerifySuite ParseVerifySuite(std::string_view name) {
  if (name == "exact") return VerifySuite::kExact;
  if (name == "analytic") return VerifySuite::kAnalytic;
  if (name == "mc") return VerifySuite::kMonteCarlo;
  if (name == "all") return VerifySuite::kAll;
  throw std::invalid_argument("unknown verify suite '" + std::string(name) +
                              "' (expected exact, analytic, mc or all)");
}

std::vector<Move> WorkedExampleMoves() {
  using enum Move;
  return {kUp,         kHorizontal, kHorizontal, kDown,       kDown,
          kDown,       kHorizontal, kHorizontal, kHorizontal, kHorizontal,
          kUp,         kHorizontal, kHorizontal, kHorizontal, kUp};
}

Environment WorkedExampleEnvironment() {
  return Environment::Explicit({{-2, -1}, {-1, 1}, {0, -1}, {1, 1}});
}

std::vector<CheckResult> RunVerification(VerifySuite suite, Execution exec,
                                         std::uint64_t seed) {
  std::vector<CheckResult> results;
  if (suite == VerifySuite::kExact || suite == VerifySuite::kAll) {
    Recorder rec(results, "exact");
    ExactSuite(rec, exec, seed);
  }
  if (suite == VerifySuite::kAnalytic || suite == VerifySuite::kAll) {
    Recorder rec(results, "analytic");
    AnalyticSuite(rec);
  }
  if (suite == VerifySuite::kMonteCarlo || suite == VerifySuite::kAll) {
    Recorder rec(results, "mc");
    MonteCarloSuite(rec, exec, seed);
  }
  return results;
}

}  // namespace orientwalk
