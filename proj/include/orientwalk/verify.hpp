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

// Self-check suites run by `orientwalk verify`.
//
//   exact     integer identities of the decomposition (round trips, the
//             worked trajectory, occupation sums, straddle criterion)
//   analytic  closed-form identities and quadrature signatures
//   mc        reduced-size Monte Carlo cross-checks against closed forms

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orientwalk/env.hpp"
#include "orientwalk/parallel.hpp"
#include "orientwalk/walk.hpp"

namespace orientwalk {

enum class VerifySuite { kExact, kAnalytic, kMonteCarlo, kAll };

/// "exact", "analytic", "mc" or "all"; std::invalid_argument otherwise.
VerifySuite ParseVerifySuite(std::string_view name);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> RunVerification(VerifySuite suite, Execution exec,
                                         std::uint64_t seed);

/// The worked 15-step trajectory: U H H D D D H H H H U H H H U.
std::vector<Move> WorkedExampleMoves();

/// Row orientations of the worked example: ε = -1, +1, -1, +1 on
/// y = -2, -1, 0, 1.
Environment WorkedExampleEnvironment();

}  // namespace orientwalk
