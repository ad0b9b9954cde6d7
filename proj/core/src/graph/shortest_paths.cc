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

#include "mlspanner/graph/shortest_paths.h"

#include <functional>
#include <queue>
#include <string>
#include <utility>

#include "mlspanner/errors.h"

namespace mlspanner {
namespace {

template <typename Allowed>
std::vector<double> Dijkstra(const Graph& g, Vertex s, Allowed allowed) {
  if (!g.HasVertex(s)) {
    throw ArgumentError("source vertex " + std::to_string(s) + " is not in the graph");
  }
  std::vector<double> dist(static_cast<size_t>(g.vertex_count()), kInfinity);
  using Entry = std::pair<double, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[static_cast<size_t>(s)] = 0.0;
  queue.emplace(0.0, s);
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (d > dist[static_cast<size_t>(x)]) continue;
    for (const Incidence& inc : g.neighbors(x)) {
      if (!allowed(inc.edge)) continue;
      const double nd = d + g.edge(inc.edge).weight;
      if (nd < dist[static_cast<size_t>(inc.to)]) {
        dist[static_cast<size_t>(inc.to)] = nd;
        queue.emplace(nd, inc.to);
      }
    }
  }
  return dist;
}

void CheckSubset(const Graph& g, const EdgeSet& allowed) {
  if (allowed.universe() != g.edge_count()) {
    throw ArgumentError("edge set does not belong to this graph");
  }
}

}  // namespace

std::vector<double> SingleSourceDistances(const Graph& g, Vertex s) {
  return Dijkstra(g, s, [](EdgeId) { return true; });
}

std::vector<double> SingleSourceDistances(const Graph& g, Vertex s, const EdgeSet& allowed) {
  CheckSubset(g, allowed);
  return Dijkstra(g, s, [&allowed](EdgeId e) { return allowed.contains(e); });
}

DistanceMatrix AllPairsDistances(const Graph& g) {
  DistanceMatrix m(g.vertex_count());
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    auto row = SingleSourceDistances(g, s);
    for (Vertex v = 0; v < g.vertex_count(); ++v) m.at(s, v) = row[static_cast<size_t>(v)];
  }
  return m;
}

DistanceMatrix AllPairsDistances(const Graph& g, const EdgeSet& allowed) {
  DistanceMatrix m(g.vertex_count());
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    auto row = SingleSourceDistances(g, s, allowed);
    for (Vertex v = 0; v < g.vertex_count(); ++v) m.at(s, v) = row[static_cast<size_t>(v)];
  }
  return m;
}

std::optional<Path> ShortestPath(const Graph& g, Vertex u, Vertex v) {
  if (!g.HasVertex(u) || !g.HasVertex(v)) {
    throw ArgumentError("path endpoints must be vertices of the graph");
  }
  auto dist_to_v = SingleSourceDistances(g, v);
  return ShortestPathToward(g, u, v, dist_to_v);
}

std::optional<Path> ShortestPathToward(const Graph& g, Vertex u, Vertex v,
                                       std::span<const double> dist_to_v) {
  if (!g.HasVertex(u) || !g.HasVertex(v)) {
    throw ArgumentError("path endpoints must be vertices of the graph");
  }
  if (dist_to_v[static_cast<size_t>(u)] == kInfinity) return std::nullopt;

  // Greedy walk: from x, step to the smallest neighbour that stays on some
  // shortest path to v. Every choice keeps a shortest completion available,
  // so the first divergence from any other shortest path is won by this one.
  Path path;
  path.vertices.push_back(u);
  Vertex x = u;
  while (x != v) {
    const double here = dist_to_v[static_cast<size_t>(x)];
    bool advanced = false;
    for (const Incidence& inc : g.neighbors(x)) {
      const double w = g.edge(inc.edge).weight;
      const double there = dist_to_v[static_cast<size_t>(inc.to)];
      if (there < here && ApproxEqual(w + there, here)) {
        path.vertices.push_back(inc.to);
        path.edges.push_back(inc.edge);
        path.total_weight += w;
        x = inc.to;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      // Only reachable if dist_to_v was not computed on this graph.
      throw ArgumentError("distance row is inconsistent with the graph");
    }
  }
  return path;
}

}  // namespace mlspanner
