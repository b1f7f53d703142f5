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

#include <cmath>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace orientwalk {
namespace {

Report Sample() {
  Report r;
  r.command = "orientwalk simulate --lattice alternate --format csv";
  r.config = {{"lattice", "alternate"}, {"format", "csv"}};
  r.columns = {"quantity", "value"};
  r.rows = {{std::string("steps"), std::uint64_t{10}},
            {std::string("final_x"), std::int64_t{-3}},
            {std::string("ratio"), 0.1}};
  return r;
}

TEST(FormatTest, ShortestRoundTrip) {
  EXPECT_EQ(FormatNumber(0.1), "0.1");
  EXPECT_EQ(FormatNumber(1.0 / 3.0), "0.3333333333333333");
  EXPECT_EQ(FormatNumber(1e-300), "1e-300");
  EXPECT_EQ(FormatNumber(std::nan("")), "nan");
  EXPECT_EQ(FormatNumber(-std::numeric_limits<double>::infinity()), "-inf");
  for (const double v : {0.36755, 1.0 / 7.0, 12345.678e10}) {
    EXPECT_EQ(std::stod(FormatNumber(v)), v);
  }
}

TEST(CsvTest, QuotesOnlyWhenNeeded) {
  EXPECT_EQ(CsvField("plain"), "plain");
  EXPECT_EQ(CsvField("a,b"), "\"a,b\"");
  EXPECT_EQ(CsvField("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(CsvField("two\nlines"), "\"two\nlines\"");
}

TEST(CsvTest, Layout) {
  Report r = Sample();
  r.warnings = {"few trials"};
  std::ostringstream s;
  WriteCsv(s, r);
  EXPECT_EQ(s.str(),
            "# " + VersionString() +
                "\n# command: orientwalk simulate --lattice alternate --format "
                "csv\n# config.lattice: alternate\n# config.format: csv\n"
                "# warning: few trials\nquantity,value\nsteps,10\nfinal_x,-3\n"
                "ratio,0.1\n");
}

TEST(CsvTest, TimingOnlyWhenSet) {
  Report r = Sample();
  std::ostringstream a;
  WriteCsv(a, r);
  EXPECT_EQ(a.str().find("wall_seconds"), std::string::npos);
  r.wall_seconds = 1.5;
  std::ostringstream b;
  WriteCsv(b, r);
  EXPECT_NE(b.str().find("# wall_seconds: 1.5\n"), std::string::npos);
}

TEST(JsonTest, ParsesAndKeepsTypes) {
  Report r = Sample();
  r.rows.push_back({std::string("bad"), std::nan("")});
  std::ostringstream s;
  WriteJson(s, r);
  const auto doc = nlohmann::json::parse(s.str());
  EXPECT_EQ(doc["version"], VersionString());
  EXPECT_EQ(doc["command"], r.command);
  EXPECT_EQ(doc["config"]["lattice"], "alternate");
  ASSERT_EQ(doc["rows"].size(), 4u);
  EXPECT_EQ(doc["rows"][0]["value"].get<std::uint64_t>(), 10u);
  EXPECT_EQ(doc["rows"][1]["value"].get<std::int64_t>(), -3);
  EXPECT_DOUBLE_EQ(doc["rows"][2]["value"].get<double>(), 0.1);
  EXPECT_TRUE(doc["rows"][3]["value"].is_null());
  EXPECT_FALSE(doc.contains("wall_seconds"));
}

TEST(EstimateTableTest, AppendsRowsAndWarnings) {
  EstimateTable t;
  t.rows.push_back({"mean_abs_delta", 100, 12.5, 0.3, 0.0});
  t.warnings.push_back("censored");
  Report r;
  AppendEstimateTable(r, t);
  EXPECT_EQ(r.columns, (std::vector<std::string>{"quantity", "n", "estimate",
                                                 "stderr",
                                                 "censored_fraction"}));
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(FormatCell(r.rows[0][0]), "mean_abs_delta");
  EXPECT_EQ(FormatCell(r.rows[0][1]), "100");
  EXPECT_EQ(FormatCell(r.rows[0][2]), "12.5");
  EXPECT_EQ(r.warnings, (std::vector<std::string>{"censored"}));
}

TEST(VersionTest, NamesTool) {
  EXPECT_EQ(VersionString().rfind("orientwalk ", 0), 0u);
}

}  // namespace
}  // namespace orientwalk
