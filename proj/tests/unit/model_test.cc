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
#include "mlspanner/ilp/builders.h"
#include "mlspanner/ilp/exact_solver.h"
#include "mlspanner/ilp/model.h"
#include "mlspanner/ilp/model_enumeration.h"
#include "support/oracles.h"

namespace mlspanner::ilp {
namespace {

int CountSense(const IlpModel& m, const std::string& prefix) {
  int k = 0;
  for (const Constraint& c : m.constraints()) k += c.name.rfind(prefix, 0) == 0;
  return k;
}

TEST(ModelTest, DuplicateNamesAndBadTerms) {
  IlpModel m;
  m.AddVariable({"a"});
  EXPECT_THROW(m.AddVariable({"a"}), ArgumentError);
  Variable inverted{"b"};
  inverted.lower = 2;
  EXPECT_THROW(m.AddVariable(inverted), ArgumentError);
  EXPECT_THROW(m.AddConstraint({"c", {{3, 1.0}}, Sense::kLessEqual, 1}), ArgumentError);
  EXPECT_THROW(m.Fix(0, 2), ArgumentError);
  m.Fix(0, 1);
  EXPECT_EQ(m.variable(0).lower, 1);
  EXPECT_EQ(*m.FindVariable("a"), 0);
  EXPECT_FALSE(m.FindVariable("zz"));
}

TEST(ModelTest, FeasibilityAndObjective) {
  IlpModel m;
  const int a = m.AddVariable({"a"});
  Variable y{"y", VariableKind::kInteger, 0, 3};
  const int b = m.AddVariable(y);
  m.AddConstraint({"r", {{a, 1}, {b, 1}}, Sense::kGreaterEqual, 2});
  m.SetObjective({{a, 3}, {b, 1}});
  EXPECT_TRUE(m.IsFeasible({1, 1}));
  EXPECT_FALSE(m.IsFeasible({1, 0}));
  EXPECT_FALSE(m.IsFeasible({0.5, 1.5}));
  EXPECT_FALSE(m.IsFeasible({0, 4}));
  EXPECT_DOUBLE_EQ(m.Evaluate({1, 1}), 4);
  EXPECT_EQ(SolveModelExhaustive(m).objective, 2);
}

TEST(BuildersTest, PairwiseShape) {
  const MlgsInstance tri = testing::LoadFixture("triangle.txt");
  const PairSet pairs = PairSet::AllPairs(tri.level(1));
  const IlpModel m = BuildPairwiseModel(tri.graph, pairs, tri.stretch);
  const int e = tri.graph.edge_count(), k = pairs.size();
  EXPECT_EQ(m.variable_count(), e + 2 * e * k);
  EXPECT_EQ(CountSense(m, "len_"), k);
  EXPECT_EQ(CountSense(m, "flow_"), k * 3);
  EXPECT_EQ(CountSense(m, "out_"), k * 3);
  EXPECT_EQ(CountSense(m, "link_"), k * e);
  EXPECT_TRUE(m.FindVariable("x_e_0_2"));
  EXPECT_TRUE(m.FindVariable("xa_2_0_0_1"));
  for (const Variable& v : m.variables()) {
    EXPECT_EQ(v.kind, VariableKind::kBinary);
    EXPECT_EQ(v.relaxable, v.name.rfind("xa_", 0) == 0);
  }
  EXPECT_EQ(m.layout().kind, ModelKind::kPairwise);
  EXPECT_EQ(SolveModelExhaustive(m).objective, 2);
}

TEST(BuildersTest, PairwiseErrors) {
  const MlgsInstance tri = testing::LoadFixture("triangle.txt");
  const PairSet pairs = PairSet::AllPairs(tri.level(1));
  EXPECT_THROW(BuildPairwiseModel(tri.graph, pairs, 0.5), ArgumentError);
  Graph g(3);
  g.AddEdge(0, 1, 1);
  EXPECT_THROW(BuildPairwiseModel(g, pairs, 2), DisconnectedError);
}

TEST(BuildersTest, MlgsShape) {
  const MlgsInstance hub = testing::LoadFixture("hub.txt");
  const IlpModel m = BuildMlgsModel(hub);
  const int e = hub.graph.edge_count();
  const int k = 10;  // pairs of T_1
  EXPECT_EQ(m.variable_count(), e + 2 * e * k);
  EXPECT_EQ(CountSense(m, "grade_"), 2 * e * k);
  EXPECT_EQ(CountSense(m, "link_"), 0);
  const Variable& y = m.variable(*m.FindVariable("y_0_3"));
  EXPECT_EQ(y.kind, VariableKind::kInteger);
  EXPECT_EQ(y.upper, 2);
  // m_st is 2 for a pair inside T_2 and 1 otherwise.
  const ModelLayout& layout = m.layout();
  for (size_t p = 0; p < layout.pairs.size(); ++p) {
    const bool top = layout.pairs[p].first <= 2 && layout.pairs[p].second <= 2;
    EXPECT_EQ(layout.pair_grade[p], top ? 2 : 1);
  }
}

TEST(BuildersTest, MlgsOptimumByEnumeration) {
  for (const char* name : {"hub.txt", "cycle.txt", "ladder_l2.txt"}) {
    const MlgsInstance inst = testing::LoadFixture(name);
    const EnumerationResult r = SolveModelExhaustive(BuildMlgsModel(inst));
    ASSERT_TRUE(r.feasible);
    EXPECT_NEAR(r.objective, SolveExact(inst).objective, 1e-9) << name;
  }
}

TEST(EnumerationTest, RejectsUnsupportedStructure) {
  IlpModel m;
  Variable a{"a"};
  a.block = 0;
  const int ia = m.AddVariable(a);
  m.SetObjective({{ia, 1}});
  EXPECT_THROW(SolveModelExhaustive(m), ArgumentError);
}

TEST(EnumerationTest, InfeasibleModel) {
  IlpModel m;
  const int a = m.AddVariable({"a"});
  m.AddConstraint({"r", {{a, 1}}, Sense::kGreaterEqual, 2});
  EXPECT_FALSE(SolveModelExhaustive(m).feasible);
}

}  // namespace
}  // namespace mlspanner::ilp
