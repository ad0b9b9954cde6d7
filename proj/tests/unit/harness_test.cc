// Copyright 2026 The mlspanner Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "mlspanner/errors.h"
#include "mlspanner/harness/config.h"
#include "mlspanner/harness/suite.h"
#include "support/oracles.h"

namespace mlspanner {
namespace {

ExperimentConfig SmallGrid() {
  return ParseExperimentConfig(
      "families = [erdos_renyi]\n"
      "n = [20]\n"
      "levels = [1]\n"
      "stretch = [2]\n"
      "instances_per_cell = 3\n"
      "algorithms = BU, TD, MIN, EXACT\n"
      "seed = 5\n");
}

TEST(ConfigTest, ParsesAllKeys) {
  const ExperimentConfig c = ParseExperimentConfig(
      "# comment\n"
      "families = er, watts_strogatz\n"
      "n = [20, 40]\n"
      "levels = 1,2,3\n"
      "stretch = 1.2, 1.4, 2   # trailing comment\n"
      "instances_per_cell = 2\n"
      "algorithms = [BU, MIN]\n"
      "subsolvers = heuristic, exact\n"
      "seed = 17\n"
      "er_eps = 0.5\n"
      "ws_k = 4\n"
      "ws_beta = 0.1\n"
      "large_graph_mode = true\n"
      "workers = 2\n"
      "node_limit = 1000\n"
      "time_limit = 2.5\n");
  EXPECT_EQ(c.families.size(), 2u);
  EXPECT_EQ(c.n, (std::vector<int>{20, 40}));
  EXPECT_EQ(c.levels, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(c.stretch, (std::vector<double>{1.2, 1.4, 2}));
  EXPECT_EQ(c.instances_per_cell, 2);
  EXPECT_EQ(c.algorithms, (std::vector<Algorithm>{Algorithm::kBottomUp, Algorithm::kMin}));
  EXPECT_EQ(c.subsolvers.size(), 2u);
  EXPECT_EQ(c.seed, 17u);
  EXPECT_EQ(c.er_eps, 0.5);
  EXPECT_EQ(c.ws_k, 4);
  EXPECT_EQ(c.ws_beta, 0.1);
  EXPECT_TRUE(c.large_graph_mode);
  EXPECT_EQ(c.workers, 2);
  EXPECT_EQ(c.node_limit, 1000);
  EXPECT_EQ(c.time_limit_seconds, 2.5);
}

TEST(ConfigTest, Errors) {
  EXPECT_THROW(ParseExperimentConfig("bogus = 1\n"), ParseError);
  EXPECT_THROW(ParseExperimentConfig("n = 20\nn = 30\n"), ParseError);
  EXPECT_THROW(ParseExperimentConfig("n 20\n"), ParseError);
  EXPECT_THROW(ParseExperimentConfig("families = grid\n"), ParseError);
  EXPECT_THROW(ParseExperimentConfig("families = er\nn = 20\nlevels = 1\nstretch = 2\ninstances_per_cell = 0\n"),
               ArgumentError);
  EXPECT_THROW(ParseExperimentConfig("families = er\nn = 20\nlevels = 1\n"), ArgumentError);
}

TEST(SuiteTest, CardinalityAndCsv) {
  const auto records = RunSuite(SmallGrid());
  ASSERT_EQ(records.size(), 12u);
  const std::string csv = RecordsToCsv(records);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 13);
  for (const auto& r : records) {
    EXPECT_EQ(r.status, RecordStatus::kOk);
    ASSERT_TRUE(r.opt_cost && r.cost && r.ratio);
    EXPECT_GE(*r.ratio, 1 - 1e-9);
    EXPECT_EQ(r.denominator, RatioDenominator::kOpt);
    EXPECT_EQ(r.subsolver, r.algorithm == Algorithm::kExact ? "none" : "heuristic");
  }
  // With one level BU and TD both reduce to a single subsetwise solve.
  for (size_t i = 0; i < records.size(); i += 4) {
    EXPECT_EQ(records[i + 1].ratio, records[i + 2].ratio);
  }
}

TEST(SuiteTest, ReproducibleAcrossWorkerCounts) {
  ExperimentConfig c = SmallGrid();
  c.levels = {2};
  c.stretch = {1.4};
  c.subsolvers = {SubsetSolverStrategy::kHeuristic, SubsetSolverStrategy::kExact};
  const auto one = RunSuite(c);
  c.workers = 3;
  const auto three = RunSuite(c);
  ASSERT_EQ(one.size(), three.size());
  ASSERT_EQ(one.size(), 21u);
  for (size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].seed, three[i].seed);
    EXPECT_EQ(one[i].cost, three[i].cost);
    EXPECT_EQ(one[i].ratio, three[i].ratio);
  }
}

TEST(SuiteTest, LargeGraphModeDividesByMin) {
  ExperimentConfig c = SmallGrid();
  c.large_graph_mode = true;
  c.levels = {2};
  const auto records = RunSuite(c);
  ASSERT_EQ(records.size(), 9u);  // EXACT skipped
  for (const auto& r : records) {
    EXPECT_NE(r.algorithm, Algorithm::kExact);
    EXPECT_EQ(r.denominator, RatioDenominator::kMinBuTd);
    EXPECT_FALSE(r.opt_cost);
    ASSERT_TRUE(r.ratio);
    EXPECT_GE(*r.ratio, 1.0);
    if (r.algorithm == Algorithm::kMin) {
      EXPECT_EQ(*r.ratio, 1.0);
    }
  }
}

TEST(SuiteTest, WithoutExactRatiosAreEmpty) {
  ExperimentConfig c = SmallGrid();
  c.algorithms = {Algorithm::kBottomUp};
  const auto records = RunSuite(c);
  ASSERT_EQ(records.size(), 3u);
  for (const auto& r : records) {
    EXPECT_FALSE(r.ratio);
    EXPECT_EQ(r.denominator, RatioDenominator::kNone);
  }
  const std::string csv = RecordsToCsv(records);
  EXPECT_NE(csv.find(",,,none,"), std::string::npos);
}

TEST(SuiteTest, InstanceFilesAndFailuresBecomeStatuses) {
  const std::string dir = testing::FixturePath("");
  const ExperimentConfig c = ParseExperimentConfig("instances = cycle.txt, ladder_l3.txt, missing.txt\n", dir);
  const auto records = RunSuite(c);
  ASSERT_EQ(records.size(), 12u);
  EXPECT_EQ(records[0].family, "cycle");
  EXPECT_EQ(records[0].algorithm, Algorithm::kExact);
  EXPECT_NEAR(*records[0].cost, 7.02, 1e-9);
  EXPECT_NEAR(*records[1].cost, 12, 1e-9);     // BU
  EXPECT_NEAR(*records[2].cost, 8.02, 1e-9);   // TD
  EXPECT_EQ(records[8].family, "missing");
  EXPECT_EQ(records[8].status, RecordStatus::kInfeasible);
}

TEST(SuiteTest, AggregateQuartiles) {
  std::vector<ExperimentRecord> records;
  for (double ratio : {1.0, 2.0, 3.0, 4.0}) {
    ExperimentRecord r;
    r.family = "erdos_renyi";
    r.n = 20;
    r.levels = 2;
    r.t = 1.5;
    r.algorithm = Algorithm::kBottomUp;
    r.subsolver = "heuristic";
    r.cost = ratio;
    r.ratio = ratio;
    records.push_back(r);
  }
  const auto rows = Aggregate(records);
  ASSERT_EQ(rows.size(), 4u);  // one per parameter
  EXPECT_EQ(rows[1].parameter, "n");
  EXPECT_EQ(rows[1].value, "20");
  EXPECT_EQ(rows[0].count, 4);
  EXPECT_DOUBLE_EQ(rows[0].q1, 1.75);
  EXPECT_DOUBLE_EQ(rows[0].median, 2.5);
  EXPECT_DOUBLE_EQ(rows[0].q3, 3.25);
  const std::string csv = AggregatesToCsv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kAggregateHeader);
}

TEST(SuiteTest, WritesBothFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "mlspanner_suite_test";
  std::filesystem::remove_all(dir);
  WriteSuiteOutputs(RunSuite(SmallGrid()), dir.string());
  EXPECT_TRUE(std::filesystem::exists(dir / "results.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "aggregate.csv"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace mlspanner
