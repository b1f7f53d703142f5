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

// Self-describing experiment reports in CSV or JSON.
//
// CSV layout: `#`-prefixed metadata lines (version, command, config echo,
// warnings), one header row, then data rows with RFC 4180 quoting. Numbers
// are printed in shortest round-trip form so the text is reproducible and
// lossless.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "orientwalk/estimators.hpp"

namespace orientwalk {

using Cell = std::variant<std::string, double, std::int64_t, std::uint64_t>;

struct Report {
  /// Canonical command line with every default materialized.
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> warnings;
  /// Only written when set; left unset for byte-reproducible output.
  std::optional<double> wall_seconds;
};

/// "orientwalk <version> (<git describe>)".
std::string VersionString();

/// Shortest text that parses back to the same double; "nan", "inf", "-inf"
/// for non-finite values.
std::string FormatNumber(double value);

/// RFC 4180 field quoting.
std::string CsvField(std::string_view text);

std::string FormatCell(const Cell& cell);

void WriteCsv(std::ostream& out, const Report& report);
void WriteJson(std::ostream& out, const Report& report);

/// Columns `quantity,n,estimate,stderr,censored_fraction`; warnings carried.
void AppendEstimateTable(Report& report, const EstimateTable& table);

}  // namespace orientwalk
