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

#ifndef MLSPANNER_MLGS_ALGORITHMS_H_
#define MLSPANNER_MLGS_ALGORITHMS_H_

#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "mlspanner/graph/graph.h"
#include "mlspanner/graph/instance.h"
#include "mlspanner/mlgs/graded_subgraph.h"

namespace mlspanner {

enum class SubsetSolverStrategy { kHeuristic, kExact };

std::string_view ToString(SubsetSolverStrategy strategy);
std::optional<SubsetSolverStrategy> ParseSubsetSolverStrategy(std::string_view text);

// Single-level subroutine: a (T x T)-spanner of `g` with stretch t. Must be
// reentrant; the multi-level algorithms call it once per level.
using SubsetSolveFn =
    std::function<EdgeSet(const Graph& g, std::span<const Vertex> terminals, double t)>;

struct SubsetSolver {
  SubsetSolverStrategy strategy = SubsetSolverStrategy::kHeuristic;
  SubsetSolveFn solve;
};

// Greedy-on-terminal-closure construction (SubsetwiseSpanner). The exact
// counterpart lives with the exact solver (ExactSubsetSolver).
SubsetSolver HeuristicSubsetSolver();

// Throws DisconnectedError if some pair of level-1 terminals is disconnected.
void RequireTerminalsConnected(const MlgsInstance& inst);

// E_1 is the solver's (T_1 x T_1)-spanner; each higher level keeps the
// consistent shortest paths between its terminals inside the level below.
// Level 1 is never pruned.
GradedSubgraph BottomUp(const MlgsInstance& inst, const SubsetSolver& solver);

// E_l is the solver's (T_l x T_l)-spanner and E_i is the solver's
// (T_i x T_i)-spanner united with E_{i+1}.
GradedSubgraph TopDown(const MlgsInstance& inst, const SubsetSolver& solver);

enum class CombinedChoice { kBottomUp, kTopDown };
std::string_view ToString(CombinedChoice choice);

struct CombinedResult {
  GradedSubgraph solution;
  CombinedChoice chosen = CombinedChoice::kTopDown;
  GradedSubgraph bottom_up;
  GradedSubgraph top_down;
  double bottom_up_cost = 0.0;
  double top_down_cost = 0.0;
};

// The cheaper of BottomUp and TopDown; equal costs pick TopDown.
CombinedResult Combined(const MlgsInstance& inst, const SubsetSolver& solver);

}  // namespace mlspanner

#endif  // MLSPANNER_MLGS_ALGORITHMS_H_
