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

#include "mlspanner/mlgs/algorithms.h"

#include <vector>

#include "mlspanner/errors.h"
#include "mlspanner/graph/shortest_paths.h"
#include "mlspanner/spanner/spanner.h"

namespace mlspanner {

std::string_view ToString(SubsetSolverStrategy strategy) {
  return strategy == SubsetSolverStrategy::kExact ? "exact" : "heuristic";
}

std::optional<SubsetSolverStrategy> ParseSubsetSolverStrategy(std::string_view text) {
  if (text == "heuristic") return SubsetSolverStrategy::kHeuristic;
  if (text == "exact") return SubsetSolverStrategy::kExact;
  return std::nullopt;
}

std::string_view ToString(CombinedChoice choice) {
  return choice == CombinedChoice::kBottomUp ? "BU" : "TD";
}

SubsetSolver HeuristicSubsetSolver() {
  return {SubsetSolverStrategy::kHeuristic,
          [](const Graph& g, std::span<const Vertex> terminals, double t) {
            return SubsetwiseSpanner(g, terminals, t);
          }};
}

void RequireTerminalsConnected(const MlgsInstance& inst) {
  ValidateInstance(inst);
  auto base = inst.level(1);
  auto dist = SingleSourceDistances(inst.graph, base.front());
  for (Vertex v : base) {
    if (dist[static_cast<size_t>(v)] == kInfinity) throw DisconnectedError(base.front(), v);
  }
}

namespace {

EdgeSet Solve(const SubsetSolver& solver, const MlgsInstance& inst, int level) {
  EdgeSet h = solver.solve(inst.graph, inst.level(level), inst.stretch);
  if (h.universe() != inst.graph.edge_count()) {
    throw SolverError("subset solver returned an edge set for a different graph");
  }
  return h;
}

}  // namespace

GradedSubgraph BottomUp(const MlgsInstance& inst, const SubsetSolver& solver) {
  RequireTerminalsConnected(inst);
  GradedSubgraph sol(inst.graph);
  EdgeSet below = Solve(solver, inst, 1);
  sol.Raise(below, 1);
  for (int i = 2; i <= inst.level_count(); ++i) {
    Subgraph sub = InducedByEdges(inst.graph, below);
    EdgeSet kept = PathUnionPreserver(sub.graph, PairSet::AllPairs(inst.level(i)));
    EdgeSet level(inst.graph);
    for (EdgeId e : kept.ids()) level.insert(sub.parent_edge[static_cast<size_t>(e)]);
    sol.Raise(level, i);
    below = std::move(level);
  }
  return sol;
}

GradedSubgraph TopDown(const MlgsInstance& inst, const SubsetSolver& solver) {
  RequireTerminalsConnected(inst);
  const int levels = inst.level_count();
  std::vector<EdgeSet> nested(static_cast<size_t>(levels));
  nested.back() = Solve(solver, inst, levels);
  for (int i = levels - 1; i >= 1; --i) {
    EdgeSet here = Solve(solver, inst, i);
    here.InsertAll(nested[static_cast<size_t>(i)]);
    nested[static_cast<size_t>(i - 1)] = std::move(here);
  }
  return GradedSubgraph::FromLevels(nested);
}

CombinedResult Combined(const MlgsInstance& inst, const SubsetSolver& solver) {
  CombinedResult out;
  out.bottom_up = BottomUp(inst, solver);
  out.top_down = TopDown(inst, solver);
  out.bottom_up_cost = SolutionCost(inst, out.bottom_up);
  out.top_down_cost = SolutionCost(inst, out.top_down);
  const bool bu_cheaper = out.bottom_up_cost < out.top_down_cost &&
                          !ApproxEqual(out.bottom_up_cost, out.top_down_cost);
  out.chosen = bu_cheaper ? CombinedChoice::kBottomUp : CombinedChoice::kTopDown;
  out.solution = bu_cheaper ? out.bottom_up : out.top_down;
  return out;
}

}  // namespace mlspanner
