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

#ifndef MLSPANNER_ILP_EXACT_SOLVER_H_
#define MLSPANNER_ILP_EXACT_SOLVER_H_

#include <cstdint>
#include <string_view>

#include "mlspanner/graph/instance.h"
#include "mlspanner/mlgs/algorithms.h"
#include "mlspanner/mlgs/graded_subgraph.h"

namespace mlspanner::ilp {

struct ExactOptions {
  std::int64_t node_limit = 10'000'000;
  double time_limit_seconds = 0.0;  // 0 = no limit
};

enum class ExactStatus { kOptimal, kInfeasible, kUnsolved };
std::string_view ToString(ExactStatus status);

struct ExactResult {
  ExactStatus status = ExactStatus::kUnsolved;
  // Optimal when kOptimal; the best solution found when kUnsolved; empty
  // when kInfeasible. Always passes ValidateMlgs when non-empty.
  GradedSubgraph solution;
  double objective = 0.0;
  double lower_bound = 0.0;  // proved bound on the optimum
  std::int64_t nodes = 0;
  std::int64_t cuts = 0;
};

// Branch-and-cut over the grades. Grade y_e is encoded in unary by binaries
// x_e^1 >= x_e^2 >= ... (y_e = sum_j x_e^j), which makes every level a
// covering problem: for a pair (u, v) of required level m, every edge set
// meeting all u-v paths within t * d_G(u, v) must contain an edge of grade
// at least m. Such blocking sets are separated lazily and the LP relaxation
// bounds the search; integral points are accepted only after an exact
// per-pair shortest-path check and a final ValidateMlgs.
//
// Edges that cannot lie on any admissible path of a pair needing level j
// never get grade j, and edges longer than the distance between their
// endpoints never appear in an optimum; both are dropped up front.
//
// Terminals in different components give kInfeasible. Hitting the node or
// time limit gives kUnsolved together with the incumbent.
ExactResult SolveExact(const MlgsInstance& inst, const ExactOptions& options = {});

// Exhaustive enumeration of all (l+1)^|E| grade vectors, edge 0 most
// significant; the minimum-cost feasible vector wins and ties go to the
// lexicographically smallest. Throws ArgumentError when (l+1)^|E| > 2^24.
ExactResult BruteForceOracle(const MlgsInstance& inst);

// Optimal single-level solver for the multi-level algorithms. Throws
// SolverError if the solve does not finish within the limits.
SubsetSolver ExactSubsetSolver(const ExactOptions& options = {});

SubsetSolver MakeSubsetSolver(SubsetSolverStrategy strategy, const ExactOptions& options = {});

}  // namespace mlspanner::ilp

#endif  // MLSPANNER_ILP_EXACT_SOLVER_H_
