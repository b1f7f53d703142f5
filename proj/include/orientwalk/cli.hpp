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

// Command-line experiment runner: simulate, decompose, analyze, estimate and
// verify subcommands writing CSV or JSON reports.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace orientwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verify failures, I/O errors
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Runs one command. `args` excludes the program name. Reports go to
/// `--out` when given, else to `out`; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// Parses a grid of positive integers: a comma list such as "1000,1e4" or
/// "geom:<lo>:<hi>:<count>" for rounded log-spaced points.
/// std::invalid_argument on malformed input.
std::vector<std::uint64_t> ParseGrid(std::string_view text);

/// Comma list of reals.
std::vector<double> ParseReals(std::string_view text);

}  // namespace orientwalk::cli
