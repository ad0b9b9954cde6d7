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
#include "mlspanner/format.h"
#include "mlspanner/graph/graph.h"
#include "mlspanner/graph/instance.h"
#include "mlspanner/graph/shortest_paths.h"
#include "mlspanner/graph/stretch.h"
#include "support/oracles.h"

namespace mlspanner {
namespace {

Graph Square() {
  // 0 - 1 - 2 - 3 - 0 with a chord 0 - 2.
  Graph g(4);
  g.AddEdge(0, 1, 1);
  g.AddEdge(1, 2, 1);
  g.AddEdge(2, 3, 1);
  g.AddEdge(0, 3, 1);
  g.AddEdge(0, 2, 2.5);
  return g;
}

TEST(GraphTest, RejectsBadEdges) {
  Graph g(3);
  EXPECT_THROW(g.AddEdge(0, 0, 1), ArgumentError);
  EXPECT_THROW(g.AddEdge(0, 3, 1), ArgumentError);
  EXPECT_THROW(g.AddEdge(0, 1, 0), ArgumentError);
  EXPECT_THROW(g.AddEdge(0, 1, -2), ArgumentError);
  g.AddEdge(1, 0, 2);
  EXPECT_THROW(g.AddEdge(0, 1, 3), ArgumentError);
  EXPECT_EQ(g.edge(0).u, 0);
  EXPECT_EQ(g.edge(0).v, 1);
}

TEST(GraphTest, EdgeSetAndSubgraph) {
  const Graph g = Square();
  EdgeSet s(g);
  s.insert(4);
  s.insert(1);
  s.insert(1);
  EXPECT_EQ(s.size(), 2);
  EXPECT_DOUBLE_EQ(s.Weight(g), 3.5);
  EXPECT_EQ(s.ids(), (std::vector<EdgeId>{1, 4}));
  const Subgraph sub = InducedByEdges(g, s);
  EXPECT_EQ(sub.graph.vertex_count(), 4);
  EXPECT_EQ(sub.graph.edge_count(), 2);
  EXPECT_EQ(sub.parent_edge, (std::vector<EdgeId>{1, 4}));
  s.erase(1);
  EXPECT_EQ(s.size(), 1);
}

TEST(GraphTest, PairSetNormalises) {
  const std::vector<std::pair<Vertex, Vertex>> raw{{3, 1}, {1, 3}, {0, 2}};
  const PairSet p = PairSet::FromPairs(raw);
  ASSERT_EQ(p.size(), 2);
  EXPECT_EQ(p.pairs()[0], (VertexPair{0, 2}));
  EXPECT_EQ(p.pairs()[1], (VertexPair{1, 3}));
  const std::vector<std::pair<Vertex, Vertex>> loop{{2, 2}};
  EXPECT_THROW(PairSet::FromPairs(loop), ArgumentError);
  const std::vector<Vertex> terminals{4, 1, 7};
  EXPECT_EQ(PairSet::AllPairs(terminals).size(), 3);
}

TEST(ShortestPathsTest, MatchBellmanFord) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    testing::RandomInstanceSpec spec;
    spec.max_vertices = 9;
    spec.max_edges = 20;
    const MlgsInstance inst = testing::RandomInstance(seed, spec);
    const DistanceMatrix d = AllPairsDistances(inst.graph);
    for (Vertex s = 0; s < inst.graph.vertex_count(); ++s) {
      const auto ref = testing::BellmanFord(inst.graph, s);
      for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) EXPECT_DOUBLE_EQ(d(s, v), ref[static_cast<size_t>(v)]);
    }
  }
}

TEST(ShortestPathsTest, UnreachableIsInfinite) {
  Graph g(3);
  g.AddEdge(0, 1, 1);
  EXPECT_EQ(SingleSourceDistances(g, 0)[2], kInfinity);
  EXPECT_FALSE(ShortestPath(g, 0, 2).has_value());
  EXPECT_THROW(SingleSourceDistances(g, 5), ArgumentError);
}

TEST(ShortestPathsTest, ConsistentTieBreaking) {
  // Two shortest 0-3 paths of length 2; the lexicographically smaller
  // vertex sequence 0-1-3 wins, and its prefix is the chosen 0-1 path.
  Graph g(4);
  g.AddEdge(0, 1, 1);
  g.AddEdge(0, 2, 1);
  g.AddEdge(1, 3, 1);
  g.AddEdge(2, 3, 1);
  const auto p = ShortestPath(g, 0, 3);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->vertices, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_DOUBLE_EQ(p->total_weight, 2);
  EXPECT_EQ(p->edges.size(), 2u);
}

TEST(ShortestPathsTest, PrefixesAreChosenPaths) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    testing::RandomInstanceSpec spec;
    spec.max_vertices = 8;
    spec.max_edges = 16;
    spec.max_weight = 2;  // plenty of ties
    const MlgsInstance inst = testing::RandomInstance(seed, spec);
    const Graph& g = inst.graph;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (u == v) continue;
        const auto p = ShortestPath(g, u, v);
        ASSERT_TRUE(p);
        for (size_t k = 1; k + 1 < p->vertices.size(); ++k) {
          const auto q = ShortestPath(g, u, p->vertices[k]);
          ASSERT_TRUE(q);
          EXPECT_EQ(q->vertices, std::vector<Vertex>(p->vertices.begin(), p->vertices.begin() + static_cast<long>(k) + 1));
        }
      }
    }
  }
}

TEST(StretchTest, ReportsViolations) {
  const Graph g = Square();
  EdgeSet h(g);
  h.insert(0);
  h.insert(1);
  h.insert(2);
  const std::vector<Vertex> all{0, 1, 2, 3};
  const PairSet pairs = PairSet::AllPairs(all);
  EXPECT_TRUE(StretchViolations(g, h, pairs, 3).empty());
  const auto v = StretchViolations(g, h, pairs, 2);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].u, 0);
  EXPECT_EQ(v[0].v, 3);
  EXPECT_DOUBLE_EQ(v[0].subgraph_distance, 3);
  EXPECT_DOUBLE_EQ(v[0].bound, 2);
  EXPECT_THROW(StretchViolations(g, h, pairs, 0.5), ArgumentError);
}

TEST(InstanceTest, RoundTrip) {
  for (const char* name : {"hub.txt", "cycle.txt", "triangle.txt", "ladder_l3.txt"}) {
    const MlgsInstance inst = testing::LoadFixture(name);
    const std::string text = SerializeInstance(inst);
    EXPECT_EQ(ParseInstance(text), inst) << name;
    EXPECT_EQ(SerializeInstance(ParseInstance(text)), text) << name;
  }
}

TEST(InstanceTest, HeaderIsComment) {
  const MlgsInstance inst = testing::LoadFixture("triangle.txt");
  const std::vector<std::string> header{"made by hand"};
  const std::string text = SerializeInstance(inst, header);
  EXPECT_EQ(text.rfind("# made by hand\n", 0), 0u);
  EXPECT_EQ(ParseInstance(text), inst);
}

TEST(InstanceTest, ParseErrorsCarryLines) {
  const auto line_of = [](const std::string& text) {
    try {
      ParseInstance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("nodes 3\nedge 0 1 x\n"), 2);
  EXPECT_EQ(line_of("nodes 3\nedge 0 1 1\nedge 1 2 1\nstretch 2\nlevel 1 0 5\n"), 5);
  EXPECT_EQ(line_of("edge 0 1 1\n"), 1);
  EXPECT_EQ(line_of("nodes 3\n\n# fine\nbogus 1\n"), 4);
  EXPECT_EQ(line_of("nodes 3\nedge 0 1 1\nedge 1 0 2\n"), 3);
}

TEST(InstanceTest, Validation) {
  MlgsInstance inst = testing::LoadFixture("hub.txt");
  EXPECT_NO_THROW(ValidateInstance(inst));
  EXPECT_EQ(inst.RequiredGrade(0), 2);
  EXPECT_EQ(inst.RequiredGrade(4), 1);
  EXPECT_EQ(inst.RequiredGrade(3), 0);
  MlgsInstance bad = inst;
  bad.terminals[1].push_back(3);  // not nested
  EXPECT_THROW(ValidateInstance(bad), ArgumentError);
  bad = inst;
  bad.stretch = 0.9;
  EXPECT_THROW(ValidateInstance(bad), ArgumentError);
  bad = inst;
  bad.terminals[1] = {0};
  EXPECT_THROW(ValidateInstance(bad), ArgumentError);
}

TEST(FormatTest, NumbersRoundTrip) {
  for (double x : {0.0, 1.0, 1.01, 3.0900000000000003, 1e-7, 123456789.25}) {
    const auto back = ParseNumber(FormatNumber(x));
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, x);
  }
  EXPECT_EQ(FormatNumber(3), "3");
  EXPECT_EQ(FormatNumber(1.01), "1.01");
  EXPECT_FALSE(ParseNumber("1.5x"));
  EXPECT_FALSE(ParseInteger("2.0"));
}

}  // namespace
}  // namespace mlspanner
