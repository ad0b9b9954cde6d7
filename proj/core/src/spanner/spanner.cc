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

#include "mlspanner/spanner/spanner.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "mlspanner/errors.h"
#include "mlspanner/graph/shortest_paths.h"

namespace mlspanner {
namespace {

// Distance from s to t using only edges in `h`, giving up once every
// remaining label exceeds `limit` (then the result is only known to be
// > limit and kInfinity is returned).
double BoundedDistance(const Graph& g, const EdgeSet& h, Vertex s, Vertex t, double limit,
                       std::vector<double>& dist) {
  std::fill(dist.begin(), dist.end(), kInfinity);
  using Entry = std::pair<double, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[static_cast<size_t>(s)] = 0.0;
  queue.emplace(0.0, s);
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (d > dist[static_cast<size_t>(x)]) continue;
    if (x == t) return d;
    if (!LessOrEqual(d, limit)) return kInfinity;
    for (const Incidence& inc : g.neighbors(x)) {
      if (!h.contains(inc.edge)) continue;
      const double nd = d + g.edge(inc.edge).weight;
      if (nd < dist[static_cast<size_t>(inc.to)]) {
        dist[static_cast<size_t>(inc.to)] = nd;
        queue.emplace(nd, inc.to);
      }
    }
  }
  return kInfinity;
}

}  // namespace

EdgeSet GreedySpanner(const Graph& g, double r) {
  if (!(r >= 1.0)) throw ArgumentError("greedy spanner needs r >= 1, got " + std::to_string(r));
  std::vector<EdgeId> order(static_cast<size_t>(g.edge_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&g](EdgeId a, EdgeId b) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    if (ea.weight != eb.weight) return ea.weight < eb.weight;
    if (ea.u != eb.u) return ea.u < eb.u;
    return ea.v < eb.v;
  });

  EdgeSet h(g);
  std::vector<double> scratch(static_cast<size_t>(g.vertex_count()));
  for (EdgeId e : order) {
    const Edge& edge = g.edge(e);
    const double budget = r * edge.weight;
    const double current = BoundedDistance(g, h, edge.u, edge.v, budget, scratch);
    if (!LessOrEqual(current, budget)) h.insert(e);
  }
  return h;
}

EdgeSet PathUnionPreserver(const Graph& g, const PairSet& pairs) {
  EdgeSet h(g);
  // One distance row per distinct target vertex.
  std::map<Vertex, std::vector<double>> rows;
  for (const VertexPair& p : pairs) {
    if (!g.HasVertex(p.first) || !g.HasVertex(p.second)) {
      throw ArgumentError("pair references a vertex outside the graph");
    }
    auto it = rows.find(p.second);
    if (it == rows.end()) it = rows.emplace(p.second, SingleSourceDistances(g, p.second)).first;
    auto path = ShortestPathToward(g, p.first, p.second, it->second);
    if (!path) throw DisconnectedError(p.first, p.second);
    for (EdgeId e : path->edges) h.insert(e);
  }
  return h;
}

TerminalGraph TerminalCompleteGraph(const Graph& g, std::span<const Vertex> terminals) {
  std::vector<Vertex> ts(terminals.begin(), terminals.end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  if (ts.size() < 2) throw ArgumentError("terminal complete graph needs at least two terminals");
  for (Vertex v : ts) {
    if (!g.HasVertex(v)) throw ArgumentError("terminal " + std::to_string(v) + " is not a vertex");
  }

  TerminalGraph out{Graph(static_cast<int>(ts.size())), ts};
  for (size_t i = 0; i < ts.size(); ++i) {
    auto dist = SingleSourceDistances(g, ts[i]);
    for (size_t j = i + 1; j < ts.size(); ++j) {
      const double d = dist[static_cast<size_t>(ts[j])];
      if (d == kInfinity) throw DisconnectedError(ts[i], ts[j]);
      out.graph.AddEdge(static_cast<Vertex>(i), static_cast<Vertex>(j), d);
    }
  }
  return out;
}

EdgeSet SubsetwiseSpanner(const Graph& g, std::span<const Vertex> terminals, double t) {
  if (!(t >= 1.0)) throw ArgumentError("stretch factor must be >= 1, got " + std::to_string(t));
  TerminalGraph closure = TerminalCompleteGraph(g, terminals);
  EdgeSet kept = GreedySpanner(closure.graph, t);
  PairSet pairs;
  for (EdgeId e : kept.ids()) {
    const Edge& edge = closure.graph.edge(e);
    pairs.Insert(closure.terminals[static_cast<size_t>(edge.u)],
                 closure.terminals[static_cast<size_t>(edge.v)]);
  }
  return PathUnionPreserver(g, pairs);
}

}  // namespace mlspanner
