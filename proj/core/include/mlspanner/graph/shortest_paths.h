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

#ifndef MLSPANNER_GRAPH_SHORTEST_PATHS_H_
#define MLSPANNER_GRAPH_SHORTEST_PATHS_H_

#include <optional>
#include <span>
#include <vector>

#include "mlspanner/graph/graph.h"

namespace mlspanner {

// Dijkstra from `s`. Unreachable vertices get kInfinity.
// Throws ArgumentError when `s` is not a vertex of `g`.
std::vector<double> SingleSourceDistances(const Graph& g, Vertex s);

// Same, but only edges in `allowed` may be traversed.
std::vector<double> SingleSourceDistances(const Graph& g, Vertex s, const EdgeSet& allowed);

// Dense symmetric n x n matrix of exact distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<size_t>(n) * static_cast<size_t>(n), kInfinity) {}

  int size() const { return n_; }
  double operator()(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
  double& at(Vertex u, Vertex v) { return dist_[index(u, v)]; }
  std::span<const double> row(Vertex u) const {
    return std::span<const double>(dist_).subspan(index(u, 0), static_cast<size_t>(n_));
  }

 private:
  size_t index(Vertex u, Vertex v) const {
    return static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v);
  }

  int n_ = 0;
  std::vector<double> dist_;
};

DistanceMatrix AllPairsDistances(const Graph& g);
DistanceMatrix AllPairsDistances(const Graph& g, const EdgeSet& allowed);

// Simple path as a vertex sequence plus the ids of the traversed edges.
struct Path {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
  double total_weight = 0.0;
};

// Shortest u-v path. Among equal-length shortest paths the lexicographically
// smallest vertex sequence is returned, which makes the choice consistent:
// every prefix of a returned path is itself the returned path to its
// endpoint. Returns nullopt when u and v are disconnected.
std::optional<Path> ShortestPath(const Graph& g, Vertex u, Vertex v);

// As above, reusing a precomputed distance row toward `v` (distances from v,
// which equal distances to v in an undirected graph).
std::optional<Path> ShortestPathToward(const Graph& g, Vertex u, Vertex v,
                                       std::span<const double> dist_to_v);

}  // namespace mlspanner

#endif  // MLSPANNER_GRAPH_SHORTEST_PATHS_H_
