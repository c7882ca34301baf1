// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "families.h"
#include "gtest/gtest.h"
#include "wardrop/core/errors.h"
#include "wardrop/io/json.h"

namespace wardrop::cli {
namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::path(::testing::TempDir()) /
           ("wardrop_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  std::filesystem::path dir_;
  Tolerance tol_;
};

std::vector<std::vector<std::string>> ParseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') {
        quoted = !quoted;
      } else if (ch == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += ch;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

int Column(const std::vector<std::string>& header, const std::string& name) {
  for (size_t c = 0; c < header.size(); ++c) {
    if (header[c] == name) return static_cast<int>(c);
  }
  ADD_FAILURE() << "missing column " << name;
  return 0;
}

TEST_F(CliTest, GenEchoesTheBound) {
  struct Case {
    std::string family;
    GenParams params;
    double bound;
  };
  GenParams braess;
  braess.m = 3;
  braess.eps = 0.25;
  GenParams sr;
  sr.beta = 1;
  sr.r = {0.5, 0.5};
  sr.gamma = {1, 2};
  GenParams dr = sr;
  dr.j = 2;
  dr.eps_prime = 1e-6;
  for (const Case& c : {Case{"braess-sub", braess, 2.5},
                        Case{"parallel-sr", sr, 2.5},
                        Case{"two-arc-dr", dr, 2.0}}) {
    SCOPED_TRACE(c.family);
    std::ostringstream out, err;
    ASSERT_EQ(RunGen(c.family, c.params, Path("bundle.json"), tol_, out, err),
              kExitOk);
    EXPECT_NE(out.str().find("= "), std::string::npos);
    Construction back =
        ConstructionFromJson(ReadJsonFile(Path("bundle.json")));
    EXPECT_NEAR(back.bound.value, c.bound, 1e-12);
    EXPECT_EQ(back.family, c.family);
  }
}

TEST_F(CliTest, GenToStdoutKeepsTheBundleParsable) {
  GenParams p;
  p.m = 4;
  p.eps = 0.2;
  std::ostringstream out, err;
  ASSERT_EQ(RunGen("braess-sub", p, "", tol_, out, err), kExitOk);
  EXPECT_NO_THROW(ConstructionFromJson(ParseJson(out.str())));
  EXPECT_NE(err.str().find("bound"), std::string::npos);
}

TEST_F(CliTest, AnalyzeBraessBundle) {
  GenParams p;
  p.m = 4;
  p.eps = 0.2;
  std::ostringstream sink;
  ASSERT_EQ(RunGen("braess-sub", p, Path("b.json"), tol_, sink, sink),
            kExitOk);
  AnalyzeOptions options;
  options.instance_path = Path("b.json");
  options.out_path = Path("report.json");
  std::ostringstream out, err;
  ASSERT_EQ(RunAnalyze(options, tol_, out, err), kExitOk) << err.str();
  Json report = ReadJsonFile(Path("report.json"));
  double bound = (1 + 0.2) / (1 - 0.2 * 3);
  EXPECT_NEAR(report["ratio"]["ratio"].get<double>(), bound, 1e-9 * bound);
  EXPECT_EQ(report["nash"]["certificate"]["pass"], true);
  EXPECT_EQ(report["flow"]["approx"]["pass"], true);
  EXPECT_EQ(report["alternating_path"]["q"], 3);
  EXPECT_EQ(report["stability_bound"]["holds"], true);
  EXPECT_EQ(report["stability_bound"]["applicable"], true);
}

TEST_F(CliTest, AnalyzeRejectsBadInput) {
  AnalyzeOptions options;
  options.instance_path = Path("missing.json");
  std::ostringstream out, err;
  EXPECT_THROW(RunAnalyze(options, tol_, out, err), InputError);

  WriteTextFile(Path("bad.json"), "{\"resources\": 3}");
  options.instance_path = Path("bad.json");
  EXPECT_THROW(RunAnalyze(options, tol_, out, err), InputError);
}

TEST_F(CliTest, GenRejectsMissingParameters) {
  std::ostringstream out, err;
  EXPECT_THROW(RunGen("parallel-sr", GenParams{}, "", tol_, out, err),
               InputError);
  EXPECT_THROW(RunGen("no-such-family", GenParams{}, "", tol_, out, err),
               InputError);
  EXPECT_THROW(ParseNumberList("1,x"), InputError);
}

TEST_F(CliTest, BraessSuperSweepIncreases) {
  SweepOptions options;
  options.family = "braess-super";
  options.ranges = {{"m", "3"}, {"eps", "0.5"}, {"tau", "1,10,100,1000"}};
  options.timing = false;
  std::ostringstream out, err;
  ASSERT_EQ(RunSweep(options, tol_, out, err), kExitOk) << err.str();
  auto rows = ParseCsv(out.str());
  ASSERT_EQ(rows.size(), 5u);
  int ratio = Column(rows[0], "ratio");
  int status = Column(rows[0], "status");
  double previous = 0;
  for (size_t r = 1; r < rows.size(); ++r) {
    EXPECT_EQ(rows[r][status], "ok");
    double value = std::stod(rows[r][ratio]);
    EXPECT_GT(value, previous);
    previous = value;
  }
}

TEST_F(CliTest, TwoArcWithoutDeviationsIsOptimal) {
  SweepOptions options;
  options.family = "two-arc-dr";
  options.ranges = {
      {"beta", "0"}, {"r", "0.5,0.5"}, {"gamma", "1,2"}, {"j", "2"}};
  options.timing = false;
  std::ostringstream out, err;
  ASSERT_EQ(RunSweep(options, tol_, out, err), kExitOk) << err.str();
  auto rows = ParseCsv(out.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(std::stod(rows[1][Column(rows[0], "ratio")]), 1.0, 1e-9);
}

TEST_F(CliTest, DensitySweepGapShrinks) {
  SweepOptions options;
  options.family = "density-discretize";
  options.ranges = {{"density", "uniform:0:1"},
                    {"measure", "sr"},
                    {"beta", "1"},
                    {"eps_prime", "0.1,0.01,0.001"}};
  options.timing = false;
  options.format = "json";
  std::ostringstream out, err;
  ASSERT_EQ(RunSweep(options, tol_, out, err), kExitOk) << err.str();
  Json rows = ParseJson(out.str());
  ASSERT_EQ(rows.size(), 3u);
  std::map<double, double> gap_by_width;
  for (const Json& row : rows) {
    double width = std::stod(row["eps_prime"].get<std::string>());
    double gap = row["gap"].get<double>();
    EXPECT_GE(gap, 0.0);
    EXPECT_LE(gap, 2 * width);
    gap_by_width[width] = gap;
  }
  double previous = -1.0;
  for (const auto& [width, gap] : gap_by_width) {
    EXPECT_GT(gap, previous) << width;
    previous = gap;
  }
}

TEST_F(CliTest, SweepIsDeterministicAcrossJobs) {
  SweepOptions options;
  options.family = "random-sp";
  options.ranges = {{"seed", "1:1:8"}, {"depth", "2"}, {"eps", "0.1"},
                    {"grid", "20"}};
  options.timing = false;
  std::ostringstream one, four, again, err;
  ASSERT_EQ(RunSweep(options, tol_, one, err), kExitOk) << err.str();
  options.jobs = 4;
  ASSERT_EQ(RunSweep(options, tol_, four, err), kExitOk);
  ASSERT_EQ(RunSweep(options, tol_, again, err), kExitOk);
  EXPECT_EQ(one.str(), four.str());
  EXPECT_EQ(four.str(), again.str());
  EXPECT_EQ(ParseCsv(one.str()).size(), 9u);
}

TEST_F(CliTest, SweepReportsFailedRows) {
  SweepOptions options;
  options.family = "braess-sub";
  options.ranges = {{"m", "3"}, {"eps", "-1"}};
  options.timing = false;
  std::ostringstream out, err;
  EXPECT_EQ(RunSweep(options, tol_, out, err), kExitInput);
  EXPECT_NE(err.str().find("1 of 1 rows failed"), std::string::npos);
  auto rows = ParseCsv(out.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][Column(rows[0], "status")].rfind("error", 0), 0u);
}

}  // namespace
}  // namespace wardrop::cli
