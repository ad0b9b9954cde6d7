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

#ifndef MLSPANNER_ILP_REDUCTIONS_H_
#define MLSPANNER_ILP_REDUCTIONS_H_

#include <string>
#include <vector>

#include "mlspanner/graph/graph.h"
#include "mlspanner/ilp/model.h"

namespace mlspanner::ilp {

struct ArcFixing {
  Vertex from = 0;
  Vertex to = 0;
  VertexPair pair;
  int value = 0;

  friend bool operator==(const ArcFixing&, const ArcFixing&) = default;
};

// Everything is keyed by endpoints so fixings apply to a model built on
// either the original or the reduced graph.
struct Fixings {
  std::vector<ArcFixing> arcs;            // sorted by (pair, from, to)
  std::vector<VertexPair> forced_edges;   // x_e = 1 (y_e >= 1)
  std::vector<VertexPair> deleted_edges;  // removed from the graph

  int forced_zero_count() const;
  int forced_one_count() const;
};

struct Reduction {
  Graph graph;                       // same vertex ids, surviving edges only
  std::vector<EdgeId> original_edge;  // reduced edge id -> input edge id
  Fixings fixings;
  bool infeasible = false;
  std::string conflict;  // why, when infeasible
};

// Three tests, run in order and the whole sequence twice:
//  1. an edge longer than the distance between its endpoints is deleted;
//  2. arc (i,j) is fixed to 0 for pair (u,v) if d(u,i) + c_ij + d(j,v)
//     exceeds t * d_G(u,v); an edge whose arcs are fixed to 0 for every pair
//     is deleted;
//  3. arc (i,j) is fixed to 1 for (u,v) if every u->v path avoiding it (and
//     the arcs already fixed to 0 for that pair) is longer than the budget;
//     its edge is then forced into the spanner.
// Budgets always use distances in the input graph; path lower bounds use
// distances in the current reduced graph. Never throws on feasible input;
// contradictory fixings or a pair without a path within budget set
// `infeasible`.
Reduction ReduceInstance(const Graph& g, const PairSet& pairs, double t);

// Fixes the corresponding variables of `model` (bounds only). Works for both
// model kinds; deleted edges get their edge and arc variables fixed to 0 when
// present. Throws ArgumentError if a fixing contradicts the model bounds.
void ApplyFixings(IlpModel& model, const Fixings& fixings);

// Line-oriented sidecar: `delete u v`, `force u v`, `fix i j s t value`.
std::string SerializeFixings(const Fixings& fixings);

}  // namespace mlspanner::ilp

#endif  // MLSPANNER_ILP_REDUCTIONS_H_
