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

// Test-only reference implementations, kept deliberately naive so they share
// no code with the library: Bellman-Ford distances, a Floyd-Warshall
// validator for graded solutions, and small random instances.

#ifndef MLSPANNER_TESTS_SUPPORT_ORACLES_H_
#define MLSPANNER_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "mlspanner/graph/graph.h"
#include "mlspanner/graph/instance.h"
#include "mlspanner/mlgs/graded_subgraph.h"

namespace mlspanner::testing {

std::string FixturePath(const std::string& name);
MlgsInstance LoadFixture(const std::string& name);
std::string ReadFile(const std::string& path);

// Distances from s using only edges with keep[e] (all edges when empty).
std::vector<double> BellmanFord(const Graph& g, Vertex s, const std::vector<bool>& keep = {});

// Floyd-Warshall over the edges with keep[e].
std::vector<std::vector<double>> FloydWarshall(const Graph& g, const std::vector<bool>& keep = {});

// Independent feasibility check of a grading (relative tolerance 1e-9).
bool GradingIsFeasible(const MlgsInstance& inst, const std::vector<int>& grades);

struct RandomInstanceSpec {
  int min_vertices = 4;
  int max_vertices = 7;
  int max_edges = 12;
  int levels = 2;
  double stretch = 1.5;
  int max_weight = 5;
};

// Connected graph with at most max_edges edges (a random spanning tree
// plus extra edges), integer weights, and nested terminal sets of size at
// least two on every level.
MlgsInstance RandomInstance(std::uint64_t seed, const RandomInstanceSpec& spec);

}  // namespace mlspanner::testing

#endif  // MLSPANNER_TESTS_SUPPORT_ORACLES_H_
