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

#include "orientwalk/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#ifndef ORIENTWALK_VERSION
#define ORIENTWALK_VERSION "0.0.0"
#endif
#ifndef ORIENTWALK_GIT_DESCRIBE
#define ORIENTWALK_GIT_DESCRIBE "unknown"
#endif

namespace orientwalk {

std::string VersionString() {
  return std::string("orientwalk ") + ORIENTWALK_VERSION + " (" +
         ORIENTWALK_GIT_DESCRIBE + ")";
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string CsvField(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string FormatCell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, double>) {
          return FormatNumber(v);
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

namespace {

// Metadata lines are single-line by construction.
std::string OneLine(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

}  // namespace

void WriteCsv(std::ostream& out, const Report& report) {
  out << "# " << VersionString() << '\n';
  out << "# command: " << OneLine(report.command) << '\n';
  for (const auto& [key, value] : report.config) {
    out << "# config." << key << ": " << OneLine(value) << '\n';
  }
  for (const auto& w : report.warnings) {
    out << "# warning: " << OneLine(w) << '\n';
  }
  if (report.wall_seconds) {
    out << "# wall_seconds: " << FormatNumber(*report.wall_seconds) << '\n';
  }
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i) out << ',';
    out << CsvField(report.columns[i]);
  }
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << CsvField(FormatCell(row[i]));
    }
    out << '\n';
  }
}

void WriteJson(std::ostream& out, const Report& report) {
  nlohmann::ordered_json doc;
  doc["version"] = VersionString();
  doc["command"] = report.command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.config) config[key] = value;
  doc["config"] = config;
  doc["columns"] = report.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < report.columns.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v)) {
                obj[report.columns[i]] = v;
              } else {
                obj[report.columns[i]] = nullptr;
              }
            } else {
              obj[report.columns[i]] = v;
            }
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["warnings"] = report.warnings;
  if (report.wall_seconds) doc["wall_seconds"] = *report.wall_seconds;
  out << doc.dump(2) << '\n';
}

void AppendEstimateTable(Report& report, const EstimateTable& table) {
  if (report.columns.empty()) {
    report.columns = {"quantity", "n", "estimate", "stderr",
                      "censored_fraction"};
  }
  for (const auto& row : table.rows) {
    report.rows.push_back({row.quantity, row.n, row.estimate, row.std_error,
                           row.censored_fraction});
  }
  report.warnings.insert(report.warnings.end(), table.warnings.begin(),
                         table.warnings.end());
}

}  // namespace orientwalk
