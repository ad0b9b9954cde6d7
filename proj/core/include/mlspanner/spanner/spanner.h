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

#ifndef MLSPANNER_SPANNER_SPANNER_H_
#define MLSPANNER_SPANNER_SPANNER_H_

#include <span>
#include <vector>

#include "mlspanner/graph/graph.h"

namespace mlspanner {

/// Greedy r-spanner. Edges are examined by nondecreasing weight, ties broken
/// by (smaller endpoint, larger endpoint); an edge {u,v} is kept iff the
/// distance between u and v in the edges kept so far exceeds r * c(u,v).
/// Throws ArgumentError if r < 1.
EdgeSet GreedySpanner(const Graph& g, double r);

/// Union of the consistent shortest paths (see ShortestPath) of every pair.
/// Distances between requested pairs are preserved exactly.
/// Throws DisconnectedError naming the first disconnected pair.
EdgeSet PathUnionPreserver(const Graph& g, const PairSet& pairs);

/// Complete graph on a terminal set, weighted by shortest-path distance in
/// `g`. Vertex k of `graph` stands for `terminals[k]` (sorted ascending).
struct TerminalGraph {
  Graph graph;
  std::vector<Vertex> terminals;
};

/// Throws ArgumentError for fewer than two distinct terminals and
/// DisconnectedError when two terminals are not connected.
TerminalGraph TerminalCompleteGraph(const Graph& g, std::span<const Vertex> terminals);

/// Heuristic (T x T)-spanner with stretch t: greedy t-spanner of the terminal
/// complete graph, whose edges become the pair set of a path-union preserver
/// in `g`.
EdgeSet SubsetwiseSpanner(const Graph& g, std::span<const Vertex> terminals, double t);

}  // namespace mlspanner

#endif  // MLSPANNER_SPANNER_SPANNER_H_
