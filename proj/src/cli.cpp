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

#include "orientwalk/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "orientwalk/analytics.hpp"
#include "orientwalk/decomp.hpp"
#include "orientwalk/env.hpp"
#include "orientwalk/estimators.hpp"
#include "orientwalk/parallel.hpp"
#include "orientwalk/quadrature.hpp"
#include "orientwalk/report.hpp"
#include "orientwalk/verify.hpp"
#include "orientwalk/walk.hpp"

namespace orientwalk::cli {

namespace {

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    parts.emplace_back(text.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

double ParseReal(const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size() || !std::isfinite(value)) {
    throw std::invalid_argument("not a number: '" + token + "'");
  }
  return value;
}

std::uint64_t ToCount(double value, const std::string& token) {
  if (!(value >= 1.0) || value > 1e18 || std::floor(value) != value) {
    throw std::invalid_argument("expected a positive integer, got '" + token +
                                "'");
  }
  return static_cast<std::uint64_t>(value);
}

std::vector<Move> ParseMoves(std::string_view text) {
  std::vector<Move> moves;
  for (const char c : text) {
    switch (c) {
      case 'U': case 'u': moves.push_back(Move::kUp); break;
      case 'D': case 'd': moves.push_back(Move::kDown); break;
      case 'H': case 'h': moves.push_back(Move::kHorizontal); break;
      case ',': case ' ': break;
      default:
        throw std::invalid_argument(std::string("bad move '") + c +
                                    "' (expected U, D or H)");
    }
  }
  return moves;
}

// Shared state across subcommands.
struct Globals {
  int threads = 1;
  std::string format = "csv";
  std::string out_path;
  bool timing = false;
};

// Builds the canonical command echo and config lines.
class ConfigEcho {
 public:
  explicit ConfigEcho(std::string subcommand)
      : command_("orientwalk " + std::move(subcommand)) {}

  void Value(const std::string& key, const std::string& value) {
    command_ += " --" + key + " " + Quote(value);
    config_.emplace_back(key, value);
  }
  void Flag(const std::string& key, bool on) {
    if (on) command_ += " --" + key;
    config_.emplace_back(key, on ? "true" : "false");
  }

  void Fill(Report& report, const Globals& g) const {
    report.command = command_ + " --format " + g.format;
    report.config = config_;
    report.config.emplace_back("format", g.format);
  }

 private:
  static std::string Quote(const std::string& v) {
    if (!v.empty() && v.find_first_of(" \t\"'\\") == std::string::npos) {
      return v;
    }
    std::string out = "'";
    for (const char c : v) {
      if (c == '\'') {
        out += "'\\''";
      } else {
        out += c;
      }
    }
    return out + "'";
  }

  std::string command_;
  std::vector<std::pair<std::string, std::string>> config_;
};

std::string Num(double v) { return FormatNumber(v); }

std::string JoinGrid(const std::vector<std::uint64_t>& grid) {
  std::string s;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(grid[i]);
  }
  return s;
}

std::string JoinReals(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += Num(v[i]);
  }
  return s;
}

void Emit(const Report& report, const Globals& g, std::ostream& out) {
  const auto write = [&](std::ostream& os) {
    if (g.format == "json") {
      WriteJson(os, report);
    } else {
      WriteCsv(os, report);
    }
  };
  if (g.out_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(g.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + g.out_path + "'");
  write(file);
  if (!file) throw std::runtime_error("failed writing '" + g.out_path + "'");
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
  std::string lattice = "alternate";
  std::uint64_t steps = 1000;
  std::uint64_t seed = 1;
  std::uint64_t stream = 0;
  std::string moves;
  std::string record;
};

Trajectory BuildTrajectory(const Environment& env, const SimulateArgs& a) {
  if (!a.moves.empty()) return Replay(env, ParseMoves(a.moves));
  return Simulate(env, a.steps, a.seed, a.stream);
}

void EchoSimulation(ConfigEcho& echo, const SimulateArgs& a) {
  echo.Value("lattice", a.lattice);
  if (!a.moves.empty()) {
    echo.Value("moves", a.moves);
  } else {
    echo.Value("steps", std::to_string(a.steps));
    echo.Value("seed", std::to_string(a.seed));
    echo.Value("stream", std::to_string(a.stream));
  }
}

Report RunSimulate(const SimulateArgs& a, const Globals& g) {
  const Environment env = ParseEnvironment(a.lattice);
  ConfigEcho echo("simulate");
  EchoSimulation(echo, a);
  if (!a.record.empty()) echo.Value("record", a.record);
  Report report;
  echo.Fill(report, g);
  report.columns = {"quantity", "value"};

  WalkSummary s;
  if (!a.record.empty() || !a.moves.empty()) {
    const Trajectory traj = BuildTrajectory(env, a);
    s.steps = traj.moves.size();
    s.final_state = traj.positions.back();
    s.origin_visits = OriginVisits(traj);
    for (const Move m : traj.moves) {
      if (m == Move::kUp) ++s.up;
      if (m == Move::kDown) ++s.down;
      if (m == Move::kHorizontal) ++s.horizontal;
    }
    if (!a.record.empty()) {
      std::ofstream file(a.record, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open '" + a.record + "'");
      WriteTrajectoryCsv(file, traj);
    }
  } else {
    s = SimulateStreaming(env, a.steps, a.seed, a.stream);
  }
  report.rows = {
      {std::string("steps"), s.steps},
      {std::string("final_x"), s.final_state.x},
      {std::string("final_y"), s.final_state.y},
      {std::string("origin_visits"), s.origin_visits},
      {std::string("up_moves"), s.up},
      {std::string("down_moves"), s.down},
      {std::string("horizontal_moves"), s.horizontal},
  };
  return report;
}

// --- decompose --------------------------------------------------------------

Report RunDecompose(const SimulateArgs& a, const std::string& input,
                    const Globals& g) {
  ConfigEcho echo("decompose");
  Trajectory traj;
  if (!input.empty()) {
    echo.Value("input", input);
    std::ifstream file(input, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open '" + input + "'");
    traj = ReadTrajectoryCsv(file);
  } else {
    EchoSimulation(echo, a);
    traj = BuildTrajectory(ParseEnvironment(a.lattice), a);
  }
  const Decomposition d = Decompose(ExtractIncrements(traj));
  Report report;
  echo.Fill(report, g);
  report.columns = {"index", "psi", "xi_tilde"};
  for (std::size_t j = 0; j <= d.psi.size(); ++j) {
    std::vector<Cell> row{static_cast<std::uint64_t>(j)};
    row.emplace_back(j > 0 ? std::to_string(static_cast<int>(d.psi[j - 1]))
                           : std::string());
    row.emplace_back(j < d.xi_tilde.size() ? std::to_string(d.xi_tilde[j])
                                           : std::string());
    report.rows.push_back(std::move(row));
  }
  return report;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string quantity;
  double p = 2.0 / 3.0;
  std::string n;
  std::string theta;
  std::string cutoff;
  double tol = 1e-8;
  std::size_t max_panels = 50'000;
};

Report RunAnalyze(AnalyzeArgs a, const Globals& g) {
  const SpectralParams params(a.p);
  QuadratureSpec spec;
  spec.rel_tol = a.tol;
  spec.max_panels = a.max_panels;
  if (!(a.tol > 0.0)) throw std::invalid_argument("--tol must be > 0");

  ConfigEcho echo("analyze");
  echo.Value("quantity", a.quantity);
  echo.Value("p", Num(a.p));
  Report report;
  report.columns = {"input", "value", "abs_err_estimate"};
  const auto row = [&](std::string input, double value, double err) {
    report.rows.push_back({std::move(input), value, err});
  };

  if (a.quantity == "return-prob-L" || a.quantity == "green-sum-L") {
    const bool green = a.quantity == "green-sum-L";
    if (a.n.empty()) a.n = green ? "100,1000,10000" : "1,2,10,100,1000";
    const auto grid = ParseGrid(a.n);
    echo.Value("n", JoinGrid(grid));
    echo.Value("tol", Num(a.tol));
    echo.Value("max-panels", std::to_string(a.max_panels));
    std::vector<double> x, y;
    for (const auto n : grid) {
      const QuadratureResult r =
          green ? GreenSumL(params, n, spec) : ReturnProbL(params, n, spec);
      row("n=" + std::to_string(n), r.value, r.abs_error);
      x.push_back(std::log(static_cast<double>(n)));
      y.push_back(r.value);
    }
    if (green && grid.size() >= 2) {
      const LinearFit fit = FitLine(x, y);
      row("log_slope", fit.slope, fit.slope_std_error);
      row("log_intercept", fit.intercept, 0.0);
      row("log_fit_r2", fit.r_squared, 0.0);
    }
  } else if (a.quantity == "green-sum-H") {
    if (a.cutoff.empty()) a.cutoff = "1e-2,1e-4,1e-6,1e-8";
    const auto cutoffs = ParseReals(a.cutoff);
    echo.Value("cutoff", JoinReals(cutoffs));
    echo.Value("tol", Num(a.tol));
    echo.Value("max-panels", std::to_string(a.max_panels));
    for (const double eps : cutoffs) {
      const QuadratureResult r = GreenSumH(params, eps, spec);
      row("eps=" + Num(eps), r.value, r.abs_error);
    }
  } else if (a.quantity == "g-limit") {
    if (a.theta.empty()) a.theta = "1e-2,1e-4,1e-6,1e-8";
    const auto thetas = ParseReals(a.theta);
    echo.Value("theta", JoinReals(thetas));
    std::vector<double> ratios;
    for (const double t : thetas) {
      ratios.push_back(GHLimitRatio(params, t).real());
      row("theta=" + Num(t), ratios.back(), 0.0);
    }
    if (thetas.size() >= 2) {
      // (1 - g)/sqrt(θ) = L + c sqrt(θ) + O(θ): eliminate the sqrt(θ) term.
      const double t1 = thetas[thetas.size() - 2];
      const double t2 = thetas.back();
      const double k = std::sqrt(t2 / t1);
      const double limit =
          (ratios.back() - k * ratios[ratios.size() - 2]) / (1.0 - k);
      row("richardson_limit", limit, std::abs(limit - ratios.back()));
    }
    row("sqrt(q/p)", std::sqrt(params.q() / params.p()), 0.0);
  } else if (a.quantity == "char-L") {
    if (a.n.empty()) a.n = "1";
    if (a.theta.empty()) a.theta = "0.5,1,2";
    const auto grid = ParseGrid(a.n);
    const auto thetas = ParseReals(a.theta);
    echo.Value("n", JoinGrid(grid));
    echo.Value("theta", JoinReals(thetas));
    for (const auto n : grid) {
      for (const double t : thetas) {
        row("n=" + std::to_string(n) + ";theta=" + Num(t),
            CharL(params, t, n), 0.0);
      }
    }
  } else {
    throw std::invalid_argument(
        "unknown --quantity '" + a.quantity +
        "' (expected return-prob-L, green-sum-L, green-sum-H, g-limit or "
        "char-L)");
  }
  echo.Fill(report, g);
  return report;
}

// --- estimate ---------------------------------------------------------------

struct EstimateArgs {
  std::string quantity;
  std::string lattice = "random:1";
  std::string n;
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultStepCap;
  bool resample_env = false;
  std::uint64_t environments = 20;
  std::string deltas = "0.1,0.25,0.2";
  std::uint64_t samples = 10'000;
  std::uint64_t permutations = 1999;
  double alpha = 1e-3;
  double p = 2.0 / 3.0;
  double theta = 0.5;
};

Report RunEstimate(EstimateArgs a, const Globals& g) {
  const Environment env = ParseEnvironment(a.lattice);
  EstimatorOptions options;
  options.execution = ExecutionForThreads(g.threads);
  options.step_cap = a.cap;
  options.resample_environment = a.resample_env;
  if (a.cap == 0) throw std::invalid_argument("--cap must be >= 1");

  ConfigEcho echo("estimate");
  echo.Value("quantity", a.quantity);
  Report report;
  const auto common = [&](bool trials, bool resample) {
    echo.Value("lattice", a.lattice);
    echo.Value("n", JoinGrid(ParseGrid(a.n)));
    if (trials) echo.Value("trials", std::to_string(a.trials));
    echo.Value("seed", std::to_string(a.seed));
    echo.Value("cap", std::to_string(a.cap));
    if (resample) echo.Flag("resample-env", a.resample_env);
  };

  if (a.quantity == "delta-scaling") {
    if (a.n.empty()) a.n = "geom:1000:100000:5";
    common(true, true);
    const auto r = DeltaScaling(env, ParseGrid(a.n), a.trials, a.seed, options);
    AppendEstimateTable(report, r.table);
  } else if (a.quantity == "speed") {
    if (a.n.empty()) a.n = "100000";
    common(true, true);
    echo.Value("p", Num(a.p));
    const auto r = SpeedEstimate(env, ParseGrid(a.n), a.trials, a.seed,
                                 DefaultMoments(SpectralParams(a.p)), options);
    AppendEstimateTable(report, r.table);
  } else if (a.quantity == "visits") {
    if (a.n.empty()) a.n = "10000,100000,1000000";
    common(true, false);
    echo.Value("environments", std::to_string(a.environments));
    const auto r = VisitCensus(env, ParseGrid(a.n), a.trials, a.environments,
                               a.seed, options);
    AppendEstimateTable(report, r.table);
  } else if (a.quantity == "fluctuations") {
    if (a.n.empty()) a.n = "100,1000,10000";
    common(true, true);
    const auto d = ParseReals(a.deltas);
    if (d.size() != 3) {
      throw std::invalid_argument("--deltas needs three values d1,d2,d3");
    }
    echo.Value("deltas", JoinReals(d));
    const auto r = FluctuationDiagnostics(env, ParseGrid(a.n), a.trials,
                                          {d[0], d[1], d[2]}, a.seed, options);
    AppendEstimateTable(report, r.table);
  } else if (a.quantity == "h-identity") {
    // Always on the half-plane lattice; --lattice is not used.
    if (a.n.empty()) a.n = "1,5";
    echo.Value("n", JoinGrid(ParseGrid(a.n)));
    echo.Value("samples", std::to_string(a.samples));
    echo.Value("seed", std::to_string(a.seed));
    echo.Value("cap", std::to_string(a.cap));
    echo.Value("permutations", std::to_string(a.permutations));
    echo.Value("alpha", Num(a.alpha));
    for (const auto n : ParseGrid(a.n)) {
      const auto r = HIdentityTest(n, a.samples, a.seed, a.alpha,
                                   a.permutations, options);
      AppendEstimateTable(report, r.table);
    }
  } else if (a.quantity == "epoch") {
    if (a.n.empty()) a.n = "2";
    common(true, true);
    echo.Value("theta", Num(a.theta));
    for (const auto n : ParseGrid(a.n)) {
      const auto r = EpochStatistics(env, n, a.theta, a.trials, a.seed, options);
      AppendEstimateTable(report, r.table);
    }
  } else {
    throw std::invalid_argument(
        "unknown --quantity '" + a.quantity +
        "' (expected delta-scaling, speed, visits, fluctuations, h-identity "
        "or epoch)");
  }
  echo.Fill(report, g);
  return report;
}

// --- verify -----------------------------------------------------------------

int RunVerify(const std::string& suite, std::uint64_t seed, const Globals& g,
              std::ostream& out, std::ostream& err) {
  ConfigEcho echo("verify");
  echo.Value("suite", suite);
  echo.Value("seed", std::to_string(seed));
  const auto results = RunVerification(ParseVerifySuite(suite),
                                       ExecutionForThreads(g.threads), seed);
  Report report;
  echo.Fill(report, g);
  report.columns = {"suite", "check", "passed", "detail"};
  bool all = true;
  for (const auto& r : results) {
    report.rows.push_back({r.suite, r.name,
                           std::string(r.passed ? "true" : "false"), r.detail});
    all = all && r.passed;
    if (!r.passed) err << "FAILED " << r.suite << "/" << r.name << ": "
                       << r.detail << '\n';
  }
  Emit(report, g, out);
  return all ? kExitOk : kExitFailure;
}

}  // namespace

std::vector<std::uint64_t> ParseGrid(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty grid");
  std::vector<std::uint64_t> grid;
  if (text.starts_with("geom:")) {
    const auto parts = Split(text.substr(5), ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("expected geom:<lo>:<hi>:<count>");
    }
    const double lo = ParseReal(parts[0]);
    const double hi = ParseReal(parts[1]);
    const std::uint64_t count = ToCount(ParseReal(parts[2]), parts[2]);
    if (!(lo >= 1.0) || !(hi > lo) || count < 2) {
      throw std::invalid_argument("geom grid needs 1 <= lo < hi, count >= 2");
    }
    for (std::uint64_t i = 0; i < count; ++i) {
      const double f = static_cast<double>(i) / static_cast<double>(count - 1);
      const auto v = static_cast<std::uint64_t>(
          std::llround(lo * std::pow(hi / lo, f)));
      if (grid.empty() || v > grid.back()) grid.push_back(v);
    }
    return grid;
  }
  for (const auto& token : Split(text, ',')) {
    grid.push_back(ToCount(ParseReal(token), token));
  }
  return grid;
}

std::vector<double> ParseReals(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty list");
  std::vector<double> out;
  for (const auto& token : Split(text, ',')) out.push_back(ParseReal(token));
  return out;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Random walks on horizontally oriented lattices", "orientwalk"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads (default 1)")
      ->check(CLI::Range(1, 1024));
  app.add_option("--format", g.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out_path, "Report path (default stdout)");
  app.add_flag("--timing", g.timing,
               "Add wall-clock time to the report (breaks byte equality)");
  app.set_version_flag("--version", VersionString());

  SimulateArgs sim;
  const auto add_sim = [&](CLI::App* sub) {
    sub->add_option("--lattice", sim.lattice,
                    "alternate | halfplane | strip:<l> | random:<seed> | "
                    "explicit:<path>");
    sub->add_option("--steps", sim.steps, "Number of moves");
    sub->add_option("--seed", sim.seed, "Move seed");
    sub->add_option("--stream", sim.stream, "Trial stream index");
    sub->add_option("--moves", sim.moves,
                    "Explicit move string over U, D, H (overrides --steps)");
  };
  auto* simulate = app.add_subcommand("simulate", "Simulate one trajectory");
  add_sim(simulate);
  simulate->add_option("--record", sim.record, "Write the trajectory CSV here");

  std::string input;
  auto* decompose =
      app.add_subcommand("decompose", "Skeleton/waiting-time decomposition");
  add_sim(decompose);
  decompose->add_option("--input", input, "Trajectory CSV (step,x,y)");

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Closed forms and quadrature");
  analyze->add_option("--quantity", an.quantity)
      ->required()
      ->check(CLI::IsMember(
          {"return-prob-L", "green-sum-L", "green-sum-H", "g-limit", "char-L"}));
  analyze->add_option("--p", an.p, "Run-law parameter p (q = 1 - p)");
  analyze->add_option("--n", an.n, "Epoch grid, e.g. 100,1000 or geom:lo:hi:k");
  analyze->add_option("--theta", an.theta, "Comma list of angles");
  analyze->add_option("--cutoff", an.cutoff, "Comma list of cutoffs epsilon");
  analyze->add_option("--tol", an.tol, "Relative quadrature tolerance");
  analyze->add_option("--max-panels", an.max_panels, "Quadrature panel limit");

  EstimateArgs est;
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimators");
  estimate->add_option("--quantity", est.quantity)
      ->required()
      ->check(CLI::IsMember({"delta-scaling", "speed", "visits",
                             "fluctuations", "h-identity", "epoch"}));
  estimate->add_option("--lattice", est.lattice, "Environment spec");
  estimate->add_option("--n", est.n, "Grid, e.g. 1000,10000 or geom:lo:hi:k");
  estimate->add_option("--trials", est.trials, "Trajectories per grid point");
  estimate->add_option("--seed", est.seed, "Seed");
  estimate->add_option("--cap", est.cap, "Chain-step cap per trajectory");
  estimate->add_flag("--resample-env", est.resample_env,
                     "Fresh random environment per trial");
  estimate->add_option("--environments", est.environments,
                       "Quenched environments for visits on random lattices");
  estimate->add_option("--deltas", est.deltas, "d1,d2,d3 for fluctuations");
  estimate->add_option("--samples", est.samples, "Samples per side (h-identity)");
  estimate->add_option("--permutations", est.permutations,
                       "Permutations for the two-sample test");
  estimate->add_option("--alpha", est.alpha, "Significance level");
  estimate->add_option("--p", est.p, "Run-law parameter p for m1");
  estimate->add_option("--theta", est.theta, "Angle for epoch statistics");

  std::string suite = "all";
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"exact", "analytic", "mc", "all"}));
  verify->add_option("--seed", verify_seed, "Seed for randomized checks");

  std::vector<const char*> argv{"orientwalk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  SetThreadCount(g.threads);
  const auto start = std::chrono::steady_clock::now();
  try {
    Report report;
    if (*verify) return RunVerify(suite, verify_seed, g, out, err);
    if (*simulate) report = RunSimulate(sim, g);
    if (*decompose) report = RunDecompose(sim, input, g);
    if (*analyze) report = RunAnalyze(an, g);
    if (*estimate) report = RunEstimate(est, g);
    if (g.timing) {
      report.wall_seconds = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    }
    for (const auto& w : report.warnings) err << "warning: " << w << '\n';
    Emit(report, g, out);
    return kExitOk;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace orientwalk::cli
