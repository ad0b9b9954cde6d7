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

#include "mlspanner/ilp/reductions.h"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "mlspanner/errors.h"
#include "mlspanner/graph/shortest_paths.h"

namespace mlspanner::ilp {
namespace {

struct ArcKey {
  VertexPair pair;
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const ArcKey&, const ArcKey&) = default;
};

// Directed Dijkstra from s; `allowed(e, from, to)` filters arcs. Fills the
// arc used to reach each vertex (edge id, -1 at the root / unreachable).
using ArcFilter = std::function<bool(EdgeId, Vertex, Vertex)>;

std::vector<double> DirectedDistances(const Graph& g, Vertex s, const ArcFilter& allowed,
                                      std::vector<EdgeId>* via = nullptr) {
  std::vector<double> dist(static_cast<size_t>(g.vertex_count()), kInfinity);
  if (via) via->assign(static_cast<size_t>(g.vertex_count()), -1);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[static_cast<size_t>(s)] = 0.0;
  queue.push({0.0, s});
  while (!queue.empty()) {
    auto [d, x] = queue.top();
    queue.pop();
    if (d > dist[static_cast<size_t>(x)]) continue;
    for (const Incidence& inc : g.neighbors(x)) {
      if (!allowed(inc.edge, x, inc.to)) continue;
      const double nd = d + g.edge(inc.edge).weight;
      if (nd < dist[static_cast<size_t>(inc.to)]) {
        dist[static_cast<size_t>(inc.to)] = nd;
        if (via) (*via)[static_cast<size_t>(inc.to)] = inc.edge;
        queue.push({nd, inc.to});
      }
    }
  }
  return dist;
}

class Reducer {
 public:
  Reducer(const Graph& g, const PairSet& pairs, double t)
      : g_(g), pairs_(pairs.pairs().begin(), pairs.pairs().end()), t_(t),
        alive_(static_cast<size_t>(g.edge_count()), true),
        original_(AllPairsDistances(g)) {}

  Reduction Run() {
    for (const VertexPair& p : pairs_) {
      if (original_(p.first, p.second) == kInfinity) {
        Fail("pair " + Tag(p) + " is disconnected");
        return Finish();
      }
    }
    for (int round = 0; round < 2 && !failed_; ++round) {
      DeleteDominatedEdges();
      if (!failed_) FixUnreachableArcs();
      if (!failed_) FixCriticalArcs();
    }
    return Finish();
  }

 private:
  static std::string Tag(const VertexPair& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  }

  double Budget(const VertexPair& p) const { return t_ * original_(p.first, p.second); }

  void Fail(std::string why) {
    if (failed_) return;
    failed_ = true;
    conflict_ = std::move(why);
  }

  void FixArc(const ArcKey& key, int value) {
    auto [it, inserted] = fixed_.emplace(key, value);
    if (!inserted && it->second != value) {
      Fail("arc (" + std::to_string(key.from) + "," + std::to_string(key.to) + ") for pair " +
           Tag(key.pair) + " fixed to both 0 and 1");
    }
  }

  int Fixed(const VertexPair& p, Vertex from, Vertex to) const {
    auto it = fixed_.find({p, from, to});
    return it == fixed_.end() ? -1 : it->second;
  }

  void Delete(EdgeId e) {
    if (forced_.count(e)) {
      Fail("edge {" + std::to_string(g_.edge(e).u) + "," + std::to_string(g_.edge(e).v) +
           "} is both forced and removable");
      return;
    }
    alive_[static_cast<size_t>(e)] = false;
    const Edge& edge = g_.edge(e);
    for (const VertexPair& p : pairs_) {
      for (auto [from, to] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
        auto it = fixed_.find({p, from, to});
        if (it == fixed_.end()) continue;
        if (it->second == 1) {
          Fail("edge {" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
               "} is both forced and removable");
          return;
        }
        fixed_.erase(it);
      }
    }
  }

  EdgeSet AliveSet() const {
    EdgeSet set(g_);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (alive_[static_cast<size_t>(e)]) set.insert(e);
    }
    return set;
  }

  void DeleteDominatedEdges() {
    const DistanceMatrix dist = AllPairsDistances(g_, AliveSet());
    for (EdgeId e = 0; e < g_.edge_count() && !failed_; ++e) {
      if (!alive_[static_cast<size_t>(e)]) continue;
      const Edge& edge = g_.edge(e);
      const double d = dist(edge.u, edge.v);
      if (d < edge.weight && !ApproxEqual(d, edge.weight)) Delete(e);
    }
  }

  void FixUnreachableArcs() {
    const DistanceMatrix dist = AllPairsDistances(g_, AliveSet());
    for (EdgeId e = 0; e < g_.edge_count() && !failed_; ++e) {
      if (!alive_[static_cast<size_t>(e)]) continue;
      const Edge& edge = g_.edge(e);
      bool useful = false;
      for (const VertexPair& p : pairs_) {
        for (auto [i, j] : {std::pair{edge.u, edge.v}, std::pair{edge.v, edge.u}}) {
          const double shortest = dist(p.first, i) + edge.weight + dist(j, p.second);
          if (!LessOrEqual(shortest, Budget(p))) {
            FixArc({p, i, j}, 0);
          } else if (Fixed(p, i, j) != 0) {
            useful = true;
          }
        }
      }
      if (!useful && !failed_) Delete(e);
    }
  }

  void FixCriticalArcs() {
    for (const VertexPair& p : pairs_) {
      if (failed_) return;
      const double budget = Budget(p);
      auto allowed = [&](EdgeId e, Vertex from, Vertex to) {
        return alive_[static_cast<size_t>(e)] && Fixed(p, from, to) != 0;
      };
      std::vector<EdgeId> via;
      const auto dist = DirectedDistances(g_, p.first, allowed, &via);
      if (!LessOrEqual(dist[static_cast<size_t>(p.second)], budget)) {
        Fail("no path within the stretch budget for pair " + Tag(p));
        return;
      }
      // Only arcs on one shortest path can be on every short path.
      std::vector<std::pair<Vertex, Vertex>> path;
      for (Vertex x = p.second; x != p.first;) {
        const Edge& edge = g_.edge(via[static_cast<size_t>(x)]);
        const Vertex prev = edge.u == x ? edge.v : edge.u;
        path.emplace_back(prev, x);
        x = prev;
      }
      for (auto [i, j] : path) {
        if (Fixed(p, i, j) == 1) continue;
        auto without = [&](EdgeId e, Vertex from, Vertex to) {
          return !(from == i && to == j) && allowed(e, from, to);
        };
        const auto detour = DirectedDistances(g_, p.first, without);
        if (!LessOrEqual(detour[static_cast<size_t>(p.second)], budget)) {
          FixArc({p, i, j}, 1);
          forced_.insert(*g_.FindEdge(i, j));
        }
      }
    }
  }

  Reduction Finish() {
    Reduction out;
    out.infeasible = failed_;
    out.conflict = conflict_;
    out.graph = Graph(g_.vertex_count());
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      const Edge& edge = g_.edge(e);
      if (alive_[static_cast<size_t>(e)]) {
        out.graph.AddEdge(edge.u, edge.v, edge.weight);
        out.original_edge.push_back(e);
      } else {
        out.fixings.deleted_edges.push_back({edge.u, edge.v});
      }
    }
    for (const auto& [key, value] : fixed_) {
      out.fixings.arcs.push_back({key.from, key.to, key.pair, value});
    }
    for (EdgeId e : forced_) out.fixings.forced_edges.push_back({g_.edge(e).u, g_.edge(e).v});
    std::sort(out.fixings.deleted_edges.begin(), out.fixings.deleted_edges.end());
    std::sort(out.fixings.forced_edges.begin(), out.fixings.forced_edges.end());
    return out;
  }

  const Graph& g_;
  std::vector<VertexPair> pairs_;
  double t_;
  std::vector<bool> alive_;
  DistanceMatrix original_;
  std::map<ArcKey, int> fixed_;
  std::set<EdgeId> forced_;
  bool failed_ = false;
  std::string conflict_;
};

}  // namespace

int Fixings::forced_zero_count() const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [](const ArcFixing& f) { return f.value == 0; }));
}

int Fixings::forced_one_count() const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [](const ArcFixing& f) { return f.value == 1; }));
}

Reduction ReduceInstance(const Graph& g, const PairSet& pairs, double t) {
  if (!(t >= 1.0)) throw ArgumentError("stretch must be at least 1");
  for (const VertexPair& p : pairs) {
    if (!g.HasVertex(p.first) || !g.HasVertex(p.second)) throw ArgumentError("pair vertex out of range");
  }
  return Reducer(g, pairs, t).Run();
}

void ApplyFixings(IlpModel& model, const Fixings& fixings) {
  const ModelLayout& layout = model.layout();
  for (const ArcFixing& f : fixings.arcs) {
    const Arc arc{f.from, f.to, 0};
    auto var = model.FindVariable(ArcVariableName(arc, f.pair));
    if (var) model.Fix(*var, f.value);
  }
  for (const VertexPair& e : fixings.forced_edges) {
    const Edge edge{e.first, e.second, 0.0};
    if (auto x = model.FindVariable(EdgeVariableName(edge))) model.Fix(*x, 1.0);
    if (auto y = model.FindVariable(GradeVariableName(edge))) {
      Variable& v = model.variable(*y);
      if (v.upper < 1.0) throw ArgumentError("cannot force " + v.name);
      v.lower = std::max(v.lower, 1.0);
    }
  }
  for (const VertexPair& e : fixings.deleted_edges) {
    for (size_t id = 0; id < layout.edges.size(); ++id) {
      if (layout.edges[id].u != e.first || layout.edges[id].v != e.second) continue;
      model.Fix(layout.edge_var[id], 0.0);
      for (const auto& arcs : layout.arc_var) {
        model.Fix(arcs[2 * id], 0.0);
        model.Fix(arcs[2 * id + 1], 0.0);
      }
    }
  }
}

std::string SerializeFixings(const Fixings& fixings) {
  std::ostringstream out;
  for (const VertexPair& e : fixings.deleted_edges) out << "delete " << e.first << ' ' << e.second << '\n';
  for (const VertexPair& e : fixings.forced_edges) out << "force " << e.first << ' ' << e.second << '\n';
  for (const ArcFixing& f : fixings.arcs) {
    out << "fix " << f.from << ' ' << f.to << ' ' << f.pair.first << ' ' << f.pair.second << ' '
        << f.value << '\n';
  }
  return out.str();
}

}  // namespace mlspanner::ilp
