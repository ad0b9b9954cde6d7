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

#include "mlspanner/graph/graph.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlspanner/errors.h"

namespace mlspanner {

Graph::Graph(int vertex_count) {
  if (vertex_count < 1) {
    throw ArgumentError("graph needs at least one vertex, got " + std::to_string(vertex_count));
  }
  adjacency_.resize(static_cast<size_t>(vertex_count));
}

EdgeId Graph::AddEdge(Vertex u, Vertex v, double weight) {
  if (!HasVertex(u) || !HasVertex(v)) {
    throw ArgumentError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} references a vertex outside 0.." + std::to_string(vertex_count() - 1));
  }
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw ArgumentError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} must have a finite positive weight");
  }
  if (FindEdge(u, v)) {
    throw ArgumentError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  if (u > v) std::swap(u, v);
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, weight});
  auto insert_sorted = [](std::vector<Incidence>& list, Incidence inc) {
    auto pos = std::lower_bound(list.begin(), list.end(), inc.to,
                                [](const Incidence& a, Vertex to) { return a.to < to; });
    list.insert(pos, inc);
  };
  insert_sorted(adjacency_[static_cast<size_t>(u)], {v, id});
  insert_sorted(adjacency_[static_cast<size_t>(v)], {u, id});
  return id;
}

std::optional<EdgeId> Graph::FindEdge(Vertex u, Vertex v) const {
  if (!HasVertex(u) || !HasVertex(v)) return std::nullopt;
  const auto& list = adjacency_[static_cast<size_t>(u)];
  auto pos = std::lower_bound(list.begin(), list.end(), v,
                              [](const Incidence& a, Vertex to) { return a.to < to; });
  if (pos == list.end() || pos->to != v) return std::nullopt;
  return pos->edge;
}

double Graph::TotalWeight() const {
  double total = 0.0;
  for (const Edge& e : edges_) total += e.weight;
  return total;
}

EdgeSet EdgeSet::All(const Graph& g) {
  EdgeSet set(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) set.insert(e);
  return set;
}

void EdgeSet::insert(EdgeId e) {
  auto ref = mask_[static_cast<size_t>(e)];
  if (!ref) {
    ref = true;
    ++count_;
  }
}

void EdgeSet::erase(EdgeId e) {
  auto ref = mask_[static_cast<size_t>(e)];
  if (ref) {
    ref = false;
    --count_;
  }
}

void EdgeSet::InsertAll(const EdgeSet& other) {
  if (other.universe() != universe()) {
    throw ArgumentError("edge sets over different graphs cannot be merged");
  }
  for (EdgeId e = 0; e < universe(); ++e) {
    if (other.contains(e)) insert(e);
  }
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  out.reserve(static_cast<size_t>(count_));
  for (EdgeId e = 0; e < universe(); ++e) {
    if (contains(e)) out.push_back(e);
  }
  return out;
}

double EdgeSet::Weight(const Graph& g) const {
  double total = 0.0;
  for (EdgeId e = 0; e < universe(); ++e) {
    if (contains(e)) total += g.edge(e).weight;
  }
  return total;
}

EdgeSet EdgeSetFromPairs(const Graph& g, std::span<const std::pair<Vertex, Vertex>> pairs) {
  EdgeSet set(g);
  for (const auto& [u, v] : pairs) {
    auto e = g.FindEdge(u, v);
    if (!e) {
      throw ArgumentError("{" + std::to_string(u) + "," + std::to_string(v) +
                          "} is not an edge of the graph");
    }
    set.insert(*e);
  }
  return set;
}

Subgraph InducedByEdges(const Graph& g, const EdgeSet& keep) {
  if (keep.universe() != g.edge_count()) {
    throw ArgumentError("edge set does not belong to this graph");
  }
  Subgraph sub{Graph(g.vertex_count()), {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!keep.contains(e)) continue;
    const Edge& edge = g.edge(e);
    sub.graph.AddEdge(edge.u, edge.v, edge.weight);
    sub.parent_edge.push_back(e);
  }
  return sub;
}

PairSet PairSet::FromPairs(std::span<const std::pair<Vertex, Vertex>> pairs) {
  PairSet set;
  for (const auto& [u, v] : pairs) set.Insert(u, v);
  return set;
}

PairSet PairSet::AllPairs(std::span<const Vertex> vertices) {
  PairSet set;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] != vertices[j]) set.Insert(vertices[i], vertices[j]);
    }
  }
  return set;
}

void PairSet::Insert(Vertex u, Vertex v) {
  if (u == v) throw ArgumentError("pair (" + std::to_string(u) + "," + std::to_string(u) + ") is degenerate");
  VertexPair p{std::min(u, v), std::max(u, v)};
  auto pos = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (pos == pairs_.end() || *pos != p) pairs_.insert(pos, p);
}

}  // namespace mlspanner
