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

#ifndef MLSPANNER_GRAPH_GRAPH_H_
#define MLSPANNER_GRAPH_GRAPH_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mlspanner {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Comparison tolerance for path lengths. Generated instances carry integer
// weights and compare exactly; the tolerance only absorbs float noise on
// user-supplied decimal weights.
inline constexpr double kTolerance = 1e-9;

inline double ToleranceFor(double magnitude) {
  return kTolerance * (magnitude > 1.0 ? magnitude : 1.0);
}

// a <= b up to kTolerance (relative for large values).
inline bool LessOrEqual(double a, double b) {
  if (b == kInfinity) return true;
  if (a == kInfinity) return false;
  return a <= b + ToleranceFor(b);
}

inline bool ApproxEqual(double a, double b) {
  if (a == b) return true;
  if (a == kInfinity || b == kInfinity) return false;
  return std::abs(a - b) <= ToleranceFor(std::abs(a) > std::abs(b) ? a : b);
}

// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to = 0;
  EdgeId edge = 0;
};

// Undirected graph with strictly positive edge weights on vertices 0..n-1.
// Edge ids are dense and stable in insertion order; adjacency lists are kept
// sorted by neighbour id so walks that pick "the smallest neighbour" are
// straightforward.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  // Throws ArgumentError on self-loops, duplicates, bad ids or weight <= 0.
  EdgeId AddEdge(Vertex u, Vertex v, double weight);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> neighbors(Vertex v) const {
    return adjacency_[static_cast<size_t>(v)];
  }

  std::optional<EdgeId> FindEdge(Vertex u, Vertex v) const;
  bool HasVertex(Vertex v) const { return v >= 0 && v < vertex_count(); }

  double TotalWeight() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count();
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Subset of the edges of one particular graph, as a membership mask.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const Graph& g) : mask_(static_cast<size_t>(g.edge_count()), false) {}
  explicit EdgeSet(int universe) : mask_(static_cast<size_t>(universe), false) {}

  static EdgeSet All(const Graph& g);

  int universe() const { return static_cast<int>(mask_.size()); }
  bool contains(EdgeId e) const { return mask_[static_cast<size_t>(e)]; }
  void insert(EdgeId e);
  void erase(EdgeId e);
  void InsertAll(const EdgeSet& other);
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  std::vector<EdgeId> ids() const;
  double Weight(const Graph& g) const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) { return a.mask_ == b.mask_; }

 private:
  std::vector<bool> mask_;
  int count_ = 0;
};

// Maps (u, v) endpoint pairs to an EdgeSet of `g`; throws ArgumentError when a
// pair is not an edge of `g`.
EdgeSet EdgeSetFromPairs(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs);

// The graph restricted to `keep`, on the same vertex set. `parent_edge` maps
// each new edge id back to the id in `g`.
struct Subgraph {
  Graph graph;
  std::vector<EdgeId> parent_edge;
};
Subgraph InducedByEdges(const Graph& g, const EdgeSet& keep);

// Unordered vertex pair, normalised to first < second.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Set of distinct unordered pairs under the numeric vertex order; (u, u) is
// rejected.
class PairSet {
 public:
  PairSet() = default;

  // Normalises and deduplicates. Throws ArgumentError on (u, u).
  static PairSet FromPairs(std::span<const std::pair<Vertex, Vertex>> pairs);
  // All pairs {u, v} with u != v drawn from `vertices`.
  static PairSet AllPairs(std::span<const Vertex> vertices);

  void Insert(Vertex u, Vertex v);

  std::span<const VertexPair> pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::vector<VertexPair> pairs_;  // sorted
};

}  // namespace mlspanner

#endif  // MLSPANNER_GRAPH_GRAPH_H_
