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

#include "mlspanner/errors.h"
#include "mlspanner/ilp/exact_solver.h"
#include "mlspanner/mlgs/algorithms.h"
#include "mlspanner/mlgs/graded_subgraph.h"
#include "support/oracles.h"

namespace mlspanner {
namespace {

std::vector<int> Grades(const GradedSubgraph& s) { return {s.grades().begin(), s.grades().end()}; }

TEST(GradedSubgraphTest, LevelsAndCost) {
  const MlgsInstance inst = testing::LoadFixture("hub.txt");
  const GradedSubgraph sol =
      ReadGradedSubgraphFile(testing::FixturePath("hub_grading.txt"), inst.graph);
  EXPECT_DOUBLE_EQ(SolutionCost(inst, sol), 25);
  EXPECT_EQ(sol.MaxGrade(), 2);
  EXPECT_EQ(sol.LevelEdges(2).size(), 3);
  EXPECT_EQ(sol.LevelEdges(1).size(), 5);
  const auto by_grade = CostByExactGrade(inst, sol);
  EXPECT_DOUBLE_EQ(by_grade[1], 3);
  EXPECT_DOUBLE_EQ(by_grade[2], 11);
  EXPECT_EQ(GradedSubgraph::FromLevels(sol.ToLevels(2)), sol);
  EXPECT_TRUE(ValidateMlgs(inst, sol).empty());
}

TEST(GradedSubgraphTest, FromLevelsTakesMaximum) {
  Graph g(3);
  g.AddEdge(0, 1, 1);
  g.AddEdge(1, 2, 1);
  EdgeSet a(g), b(g);
  a.insert(0);
  b.insert(1);  // not nested
  const std::vector<EdgeSet> levels{a, b};
  EXPECT_EQ(Grades(GradedSubgraph::FromLevels(levels)), (std::vector<int>{1, 2}));
}

TEST(GradedSubgraphTest, ValidationFindsViolations) {
  const MlgsInstance inst = testing::LoadFixture("hub.txt");
  GradedSubgraph sol = ReadGradedSubgraphFile(testing::FixturePath("hub_grading.txt"), inst.graph);
  sol.set_grade(*inst.graph.FindEdge(1, 3), 1);  // level 2 loses B
  const auto v = ValidateMlgs(inst, sol);
  ASSERT_FALSE(v.empty());
  for (const auto& x : v) EXPECT_EQ(x.level, 2);
  EXPECT_FALSE(ValidateMlgs(inst, GradedSubgraph(std::vector<int>{1, 2})).empty());
  GradedSubgraph too_high(inst.graph);
  too_high.set_grade(0, 3);
  EXPECT_FALSE(ValidateMlgs(inst, too_high).empty());
  EXPECT_THROW(SolutionCost(inst, too_high), ArgumentError);
}

TEST(GradedSubgraphTest, TextRoundTripAndErrors) {
  const MlgsInstance inst = testing::LoadFixture("hub.txt");
  const GradedSubgraph sol = ReadGradedSubgraphFile(testing::FixturePath("hub_grading.txt"), inst.graph);
  const std::string text = SerializeGradedSubgraph(inst.graph, sol);
  EXPECT_EQ(ParseGradedSubgraph(text, inst.graph), sol);
  EXPECT_EQ(SerializeGradedSubgraph(inst.graph, ParseGradedSubgraph(text, inst.graph)), text);
  EXPECT_THROW(ParseGradedSubgraph("grade 0 5 1\n", inst.graph), ParseError);  // 0-5 is no edge
  EXPECT_THROW(ParseGradedSubgraph("grade 0 3 1\ngrade 3 0 2\n", inst.graph), ParseError);
  EXPECT_THROW(ParseGradedSubgraph("grade 0 3\n", inst.graph), ParseError);
  EXPECT_THROW(ParseGradedSubgraph("grade 0 3 -1\n", inst.graph), ParseError);
}

TEST(AlgorithmsTest, FixtureCosts) {
  const SubsetSolver exact = ilp::ExactSubsetSolver();
  const MlgsInstance cycle = testing::LoadFixture("cycle.txt");
  EXPECT_NEAR(SolutionCost(cycle, BottomUp(cycle, exact)), 12, 1e-9);
  EXPECT_NEAR(SolutionCost(cycle, TopDown(cycle, exact)), 8.02, 1e-9);
  const CombinedResult c = Combined(cycle, exact);
  EXPECT_EQ(c.chosen, CombinedChoice::kTopDown);
  EXPECT_NEAR(SolutionCost(cycle, c.solution), 8.02, 1e-9);

  const MlgsInstance ladder = testing::LoadFixture("ladder_l3.txt");
  EXPECT_NEAR(SolutionCost(ladder, TopDown(ladder, exact)), 6.1, 1e-9);
  const CombinedResult l = Combined(ladder, exact);
  EXPECT_EQ(l.chosen, CombinedChoice::kBottomUp);
}

TEST(AlgorithmsTest, SingleLevelBottomUpEqualsTopDown) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    testing::RandomInstanceSpec spec;
    spec.levels = 1;
    spec.max_vertices = 9;
    spec.max_edges = 20;
    const MlgsInstance inst = testing::RandomInstance(seed, spec);
    for (const SubsetSolver& s : {HeuristicSubsetSolver(), ilp::ExactSubsetSolver()}) {
      EXPECT_EQ(BottomUp(inst, s), TopDown(inst, s));
    }
  }
}

TEST(AlgorithmsTest, SolutionsAreFeasible) {
  for (int levels : {1, 2, 3}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      testing::RandomInstanceSpec spec;
      spec.levels = levels;
      spec.max_vertices = 10;
      spec.max_edges = 22;
      spec.stretch = 1.0 + 0.25 * static_cast<double>(seed % 5);
      const MlgsInstance inst = testing::RandomInstance(seed * 7 + static_cast<std::uint64_t>(levels), spec);
      for (const SubsetSolver& s : {HeuristicSubsetSolver(), ilp::ExactSubsetSolver()}) {
        EXPECT_TRUE(testing::GradingIsFeasible(inst, Grades(BottomUp(inst, s))));
        EXPECT_TRUE(testing::GradingIsFeasible(inst, Grades(TopDown(inst, s))));
      }
    }
  }
}

TEST(AlgorithmsTest, DisconnectedTerminals) {
  MlgsInstance inst;
  inst.graph = Graph(4);
  inst.graph.AddEdge(0, 1, 1);
  inst.graph.AddEdge(2, 3, 1);
  inst.terminals = {{0, 1, 2}};
  inst.stretch = 2;
  EXPECT_THROW(BottomUp(inst, HeuristicSubsetSolver()), DisconnectedError);
  EXPECT_THROW(TopDown(inst, ilp::ExactSubsetSolver()), DisconnectedError);
}

TEST(AlgorithmsTest, SolverMustReturnEdgesOfTheGraph) {
  const MlgsInstance inst = testing::LoadFixture("triangle.txt");
  const SubsetSolver broken{SubsetSolverStrategy::kHeuristic,
                            [](const Graph&, std::span<const Vertex>, double) { return EdgeSet(1); }};
  EXPECT_THROW(BottomUp(inst, broken), SolverError);
}

}  // namespace
}  // namespace mlspanner
