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

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "support/oracles.h"

namespace mlspanner {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(MLSPANNER_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mlspanner_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Tmp(const std::string& name) const { return (dir_ / name).string(); }
  void Write(const std::string& name, const std::string& text) const { std::ofstream(Tmp(name)) << text; }

  fs::path dir_;
};

TEST_F(CliTest, GenerateSolveVerify) {
  const std::string inst = Tmp("g.txt");
  ASSERT_EQ(Cli("generate --family ws --n 16 --K 4 --levels 2 --stretch 1.5 --seed 3 -o " + inst).code, 0);
  EXPECT_EQ(testing::ReadFile(inst).rfind("# generator watts_strogatz", 0), 0u);
  const CliRun exact = Cli("exact " + inst + " -o " + Tmp("opt.sol"));
  ASSERT_EQ(exact.code, 0);
  EXPECT_EQ(exact.out.rfind("optimum ", 0), 0u);
  EXPECT_EQ(Cli("verify " + inst + " " + Tmp("opt.sol")).code, 0);
  const CliRun heur = Cli("heuristic --algo td --subsolver heuristic " + inst + " -o " + Tmp("td.sol"));
  ASSERT_EQ(heur.code, 0);
  EXPECT_EQ(heur.out.rfind("cost ", 0), 0u);
  EXPECT_EQ(Cli("verify " + inst + " " + Tmp("td.sol")).code, 0);
}

TEST_F(CliTest, VerifyReportsViolations) {
  Write("bad.sol", "grade 0 3 1\n");
  const CliRun r = Cli("verify " + testing::FixturePath("hub.txt") + " " + Tmp("bad.sol"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violation level"), std::string::npos);
  EXPECT_EQ(Cli("verify " + testing::FixturePath("hub.txt") + " " + testing::FixturePath("hub_grading.txt")).code,
            0);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("").code, 2);
  EXPECT_EQ(Cli("heuristic --algo xx " + testing::FixturePath("hub.txt")).code, 2);
  Write("broken.txt", "nodes 2\nedge 0 1 nope\n");
  EXPECT_EQ(Cli("exact " + Tmp("broken.txt")).code, 3);
  EXPECT_EQ(Cli("exact " + Tmp("absent.txt")).code, 3);
  Write("split.txt", "nodes 4\nedge 0 1 1\nedge 2 3 1\nstretch 2\nlevel 1 0 3\n");
  EXPECT_EQ(Cli("exact " + Tmp("split.txt")).code, 4);
  EXPECT_EQ(Cli("heuristic " + Tmp("split.txt")).code, 4);
}

TEST_F(CliTest, EmitLpWithReductions) {
  const std::string tri = testing::FixturePath("triangle.txt");
  ASSERT_EQ(Cli("emit-lp " + tri + " --pairwise -o " + Tmp("plain.lp")).code, 0);
  ASSERT_EQ(Cli("emit-lp " + tri + " --pairwise --reduce -o " + Tmp("reduced.lp")).code, 0);
  const std::string plain = testing::ReadFile(Tmp("plain.lp"));
  const std::string reduced = testing::ReadFile(Tmp("reduced.lp"));
  EXPECT_NE(plain.find("x_e_0_2"), std::string::npos);
  EXPECT_EQ(reduced.find("x_e_0_2"), std::string::npos);
  EXPECT_EQ(reduced.find("xa_0_2_"), std::string::npos);
  EXPECT_EQ(testing::ReadFile(Tmp("reduced.lp.fixings")).rfind("delete 0 2\n", 0), 0u);
  ASSERT_EQ(Cli("emit-lp " + tri + " -o " + Tmp("mlgs.lp")).code, 0);
  EXPECT_NE(testing::ReadFile(Tmp("mlgs.lp")).find("y_0_2"), std::string::npos);
}

TEST_F(CliTest, Experiment) {
  Write("grid.cfg",
        "families = er\nn = 12\nlevels = 2\nstretch = 1.5\ninstances_per_cell = 2\n"
        "algorithms = BU, TD, MIN, EXACT\nsubsolvers = exact\n");
  ASSERT_EQ(Cli("experiment -q " + Tmp("grid.cfg") + " -o " + Tmp("out")).code, 0);
  const std::string csv = testing::ReadFile(Tmp("out/results.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "family,n,m,levels,t,seed,algorithm,subsolver,cost,opt_cost,ratio,ratio_denominator,runtime_ms,status");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  EXPECT_TRUE(fs::exists(Tmp("out/aggregate.csv")));
}

TEST_F(CliTest, ExperimentOnFixtures) {
  Write("fixtures.cfg", "instances = " + testing::FixturePath("cycle.txt") + "\nsubsolvers = exact\n");
  ASSERT_EQ(Cli("experiment -q " + Tmp("fixtures.cfg") + " -o " + Tmp("out")).code, 0);
  const std::string csv = testing::ReadFile(Tmp("out/results.csv"));
  EXPECT_NE(csv.find("cycle,7,7,2,7,0,EXACT,none,7.02,7.02,1,opt,"), std::string::npos);
  EXPECT_NE(csv.find("cycle,7,7,2,7,0,BU,exact,12,7.02,"), std::string::npos);
}

}  // namespace
}  // namespace mlspanner
