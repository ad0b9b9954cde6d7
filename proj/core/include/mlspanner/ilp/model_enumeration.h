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

#ifndef MLSPANNER_ILP_MODEL_ENUMERATION_H_
#define MLSPANNER_ILP_MODEL_ENUMERATION_H_

#include <cstdint>
#include <vector>

#include "mlspanner/ilp/model.h"

namespace mlspanner::ilp {

struct EnumerationLimits {
  std::int64_t max_block_assignments = 2'000'000;  // per block
  std::int64_t max_nodes = 200'000'000;            // linking search
};

struct EnumerationResult {
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> values;  // full assignment, empty when infeasible
  std::int64_t nodes = 0;
};

// Solves a small integer model by exhaustive assignment of its own
// variables, exploiting the block structure the builders record: every
// block's feasible assignments are listed once, reduced to the bounds they
// impose on the linking variables, and the linking variables are then
// enumerated against those lists. Every variable is treated as integral
// with finite bounds; relaxable variables are enumerated over {0, 1}.
//
// Requirements: the objective touches linking variables only; a constraint
// touches at most one block, and a constraint that mixes a block with
// linking variables has exactly one linking term. Throws ArgumentError
// otherwise and SolverError when a limit is exceeded.
EnumerationResult SolveModelExhaustive(const IlpModel& model, const EnumerationLimits& limits = {});

}  // namespace mlspanner::ilp

#endif  // MLSPANNER_ILP_MODEL_ENUMERATION_H_
