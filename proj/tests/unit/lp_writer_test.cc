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

#include "mlspanner/ilp/builders.h"
#include "mlspanner/ilp/lp_writer.h"
#include "mlspanner/ilp/reductions.h"
#include "support/oracles.h"

namespace mlspanner::ilp {
namespace {

std::string Golden(const std::string& name) { return testing::ReadFile(testing::FixturePath("golden/" + name)); }

TEST(LpWriterTest, EmptyModel) {
  EXPECT_EQ(EmitLpText(IlpModel()), "Minimize\n obj: 0\nSubject To\nEnd\n");
}

TEST(LpWriterTest, SmallModelLayout) {
  IlpModel m;
  const int a = m.AddVariable({"a"});
  const int b = m.AddVariable({"b", VariableKind::kInteger, 0, 3});
  Variable c{"c", VariableKind::kContinuous, 0, 1};
  c.relaxable = true;
  const int ic = m.AddVariable(c);
  m.AddConstraint({"r1", {{a, 1}, {b, -2.5}}, Sense::kGreaterEqual, -1});
  m.AddConstraint({"r2", {{ic, 1}}, Sense::kEqual, 0.5});
  m.SetObjective({{a, 3}, {b, 1.25}});
  m.Fix(a, 1);
  EXPECT_EQ(EmitLpText(m),
            "\\ 1 arc variables (xa_*) may be relaxed to continuous [0,1]\n"
            "Minimize\n"
            " obj: 3 a + 1.25 b\n"
            "Subject To\n"
            " r1: 1 a - 2.5 b >= -1\n"
            " r2: 1 c = 0.5\n"
            "Bounds\n"
            " a = 1\n"
            " 0 <= b <= 3\n"
            " 0 <= c <= 1\n"
            "General\n"
            " b\n"
            "Binary\n"
            " a\n"
            "End\n");
}

TEST(LpWriterTest, GoldenPairwiseTriangle) {
  const MlgsInstance tri = testing::LoadFixture("triangle.txt");
  const IlpModel m = BuildPairwiseModel(tri.graph, PairSet::AllPairs(tri.level(1)), tri.stretch);
  EXPECT_EQ(EmitLpText(m), Golden("triangle_pairwise.lp"));
}

TEST(LpWriterTest, GoldenPairwiseTriangleReduced) {
  const MlgsInstance tri = testing::LoadFixture("triangle.txt");
  const PairSet pairs = PairSet::AllPairs(tri.level(1));
  const Reduction r = ReduceInstance(tri.graph, pairs, tri.stretch);
  IlpModel m = BuildPairwiseModel(r.graph, pairs, tri.stretch);
  ApplyFixings(m, r.fixings);
  const std::string text = EmitLpText(m);
  EXPECT_EQ(text, Golden("triangle_pairwise_reduced.lp"));
  EXPECT_EQ(text.find("x_e_0_2"), std::string::npos);
  EXPECT_EQ(text.find("xa_0_2_"), std::string::npos);
}

TEST(LpWriterTest, GoldenMlgsHub) {
  const IlpModel m = BuildMlgsModel(testing::LoadFixture("hub.txt"));
  EXPECT_EQ(EmitLpText(m), Golden("hub_mlgs.lp"));
  LpOptions relaxed;
  relaxed.relax_flow_variables = true;
  EXPECT_EQ(EmitLpText(m, relaxed), Golden("hub_mlgs_relaxed.lp"));
}

TEST(LpWriterTest, Deterministic) {
  const MlgsInstance inst = testing::LoadFixture("ladder_l3.txt");
  EXPECT_EQ(EmitLpText(BuildMlgsModel(inst)), EmitLpText(BuildMlgsModel(inst)));
}

}  // namespace
}  // namespace mlspanner::ilp
