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

#ifndef MLSPANNER_GRAPH_STRETCH_H_
#define MLSPANNER_GRAPH_STRETCH_H_

#include <vector>

#include "mlspanner/graph/graph.h"

namespace mlspanner {

// One pair for which d_H(u, v) > t * d_G(u, v). Disconnected pairs are
// reported too (subgraph_distance and possibly bound are infinite).
struct StretchViolation {
  Vertex u = 0;
  Vertex v = 0;
  double subgraph_distance = 0.0;
  double bound = 0.0;  // t * d_G(u, v)
};

// Empty iff `h` is a pairwise t-spanner of `g` over `pairs`.
// Throws ArgumentError if `h` is not an edge set of `g` or t < 1.
std::vector<StretchViolation> StretchViolations(const Graph& g, const EdgeSet& h,
                                                const PairSet& pairs, double t);

}  // namespace mlspanner

#endif  // MLSPANNER_GRAPH_STRETCH_H_
