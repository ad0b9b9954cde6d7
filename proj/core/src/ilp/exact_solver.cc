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

#include "mlspanner/ilp/exact_solver.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "mlspanner/errors.h"
#include "mlspanner/graph/shortest_paths.h"
#include "mlspanner/ilp/dual_simplex.h"

namespace mlspanner::ilp {

std::string_view ToString(ExactStatus status) {
  switch (status) {
    case ExactStatus::kOptimal: return "optimal";
    case ExactStatus::kInfeasible: return "infeasible";
    case ExactStatus::kUnsolved: return "unsolved";
  }
  return "unsolved";
}

namespace {

constexpr double kIntTol = 1e-6;

// Point-to-point Dijkstra with reusable buffers. Labels above `limit` are
// never expanded, which is all the budget checks need.
class PathSearch {
 public:
  explicit PathSearch(const Graph& g)
      : g_(g), dist_(static_cast<size_t>(g.vertex_count()), kInfinity),
        via_(static_cast<size_t>(g.vertex_count()), -1),
        stamp_(static_cast<size_t>(g.vertex_count()), 0) {}

  template <class Allowed>
  double Run(Vertex s, Vertex target, double limit, Allowed&& allowed) {
    ++epoch_;
    heap_.clear();
    Set(s, 0.0, -1);
    heap_.push_back({0.0, s});
    const double cutoff = limit + ToleranceFor(limit);
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
      auto [d, x] = heap_.back();
      heap_.pop_back();
      if (d > Dist(x)) continue;
      if (x == target) return d;
      for (const Incidence& inc : g_.neighbors(x)) {
        if (!allowed(inc.edge)) continue;
        const double nd = d + g_.edge(inc.edge).weight;
        if (nd > cutoff || nd >= Dist(inc.to)) continue;
        Set(inc.to, nd, inc.edge);
        heap_.push_back({nd, inc.to});
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
      }
    }
    return kInfinity;
  }

  // Edges of the path found by the last successful Run, target back to s.
  void PathTo(Vertex s, Vertex target, std::vector<EdgeId>& out) const {
    out.clear();
    for (Vertex x = target; x != s;) {
      const EdgeId e = via_[static_cast<size_t>(x)];
      out.push_back(e);
      const Edge& edge = g_.edge(e);
      x = edge.u == x ? edge.v : edge.u;
    }
  }

 private:
  double Dist(Vertex v) const {
    return stamp_[static_cast<size_t>(v)] == epoch_ ? dist_[static_cast<size_t>(v)] : kInfinity;
  }
  void Set(Vertex v, double d, EdgeId e) {
    stamp_[static_cast<size_t>(v)] = epoch_;
    dist_[static_cast<size_t>(v)] = d;
    via_[static_cast<size_t>(v)] = e;
  }

  const Graph& g_;
  std::vector<double> dist_;
  std::vector<EdgeId> via_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<std::pair<double, Vertex>> heap_;
};

struct PairInfo {
  Vertex u = 0;
  Vertex v = 0;
  int level = 1;
  double budget = 0.0;
};

// Pair requirements plus the admissibility filter shared by the search and
// its heuristics.
struct Prepared {
  const MlgsInstance* inst = nullptr;
  int levels = 0;
  bool disconnected = false;
  std::vector<PairInfo> pairs;
  std::vector<std::vector<int>> pairs_by_level;  // [level] -> pair ids
  std::vector<std::vector<char>> usable;         // [pair][edge]
  std::vector<int> cap;                          // highest useful grade per edge
};

Prepared Prepare(const MlgsInstance& inst) {
  Prepared prep;
  prep.inst = &inst;
  prep.levels = inst.level_count();
  const Graph& g = inst.graph;
  const DistanceMatrix dist = AllPairsDistances(g);
  const std::vector<int> required = inst.RequiredGrades();
  prep.pairs_by_level.resize(static_cast<size_t>(prep.levels) + 1);
  prep.cap.assign(static_cast<size_t>(g.edge_count()), 0);
  const auto base = inst.level(1);
  for (size_t a = 0; a < base.size(); ++a) {
    for (size_t b = a + 1; b < base.size(); ++b) {
      const Vertex u = base[a];
      const Vertex v = base[b];
      if (dist(u, v) == kInfinity) {
        prep.disconnected = true;
        return prep;
      }
      PairInfo p{u, v,
                 std::min(required[static_cast<size_t>(u)], required[static_cast<size_t>(v)]),
                 inst.stretch * dist(u, v)};
      std::vector<char> use(static_cast<size_t>(g.edge_count()), 0);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        // An edge longer than its endpoints' distance can be replaced by
        // that shorter path in any solution, at no extra cost.
        const double between = dist(edge.u, edge.v);
        if (between < edge.weight && !ApproxEqual(between, edge.weight)) continue;
        const double through = edge.weight + std::min(dist(u, edge.u) + dist(edge.v, v),
                                                      dist(u, edge.v) + dist(edge.u, v));
        if (!LessOrEqual(through, p.budget)) continue;
        use[static_cast<size_t>(e)] = 1;
        prep.cap[static_cast<size_t>(e)] = std::max(prep.cap[static_cast<size_t>(e)], p.level);
      }
      prep.pairs_by_level[static_cast<size_t>(p.level)].push_back(static_cast<int>(prep.pairs.size()));
      prep.pairs.push_back(p);
      prep.usable.push_back(std::move(use));
    }
  }
  return prep;
}

// Greedy grade lowering with per-pair witness paths: lowering e from g to
// g-1 only removes e from E_g, so only level-g pairs whose witness uses e
// need a new path.
class GradeImprover {
 public:
  explicit GradeImprover(const Prepared& prep) : prep_(prep), search_(prep.inst->graph) {}

  // Fills witnesses; false if some pair has no admissible path.
  bool Feasible(const std::vector<int>& y) {
    const int m = prep_.inst->graph.edge_count();
    witness_.assign(prep_.pairs.size(), std::vector<char>(static_cast<size_t>(m), 0));
    for (size_t p = 0; p < prep_.pairs.size(); ++p) {
      if (!FindPath(y, static_cast<int>(p), -1)) return false;
      for (EdgeId e : path_) witness_[p][static_cast<size_t>(e)] = 1;
    }
    return true;
  }

  // Requires a preceding successful Feasible(y).
  void Lower(std::vector<int>& y, const std::vector<EdgeId>& order) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (EdgeId e : order) {
        while (y[static_cast<size_t>(e)] > 0 && TryLower(y, e)) changed = true;
      }
    }
  }

 private:
  bool FindPath(const std::vector<int>& y, int p, EdgeId banned) {
    const PairInfo& pair = prep_.pairs[static_cast<size_t>(p)];
    const double d = search_.Run(pair.u, pair.v, pair.budget, [&](EdgeId e) {
      return e != banned && y[static_cast<size_t>(e)] >= pair.level;
    });
    if (!LessOrEqual(d, pair.budget)) return false;
    search_.PathTo(pair.u, pair.v, path_);
    return true;
  }

  bool TryLower(std::vector<int>& y, EdgeId e) {
    const int g = y[static_cast<size_t>(e)];
    std::vector<std::pair<int, std::vector<EdgeId>>> replaced;
    for (int p : prep_.pairs_by_level[static_cast<size_t>(g)]) {
      if (!witness_[static_cast<size_t>(p)][static_cast<size_t>(e)]) continue;
      if (!FindPath(y, p, e)) return false;
      replaced.push_back({p, path_});
    }
    y[static_cast<size_t>(e)] = g - 1;
    for (auto& [p, path] : replaced) {
      auto& mask = witness_[static_cast<size_t>(p)];
      std::fill(mask.begin(), mask.end(), 0);
      for (EdgeId f : path) mask[static_cast<size_t>(f)] = 1;
    }
    return true;
  }

  const Prepared& prep_;
  PathSearch search_;
  std::vector<std::vector<char>> witness_;
  std::vector<EdgeId> path_;
};

class BranchAndCut {
 public:
  BranchAndCut(const Prepared& prep, const ExactOptions& options)
      : prep_(prep), g_(prep.inst->graph), options_(options), search_(g_), improver_(prep),
        start_(std::chrono::steady_clock::now()) {
    integral_costs_ = true;
    for (const Edge& e : g_.edges()) {
      if (std::abs(e.weight - std::round(e.weight)) > 1e-9) integral_costs_ = false;
    }
    var_of_.assign(static_cast<size_t>(g_.edge_count()), std::vector<int>(static_cast<size_t>(prep.levels), -1));
    std::vector<double> cost;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      for (int j = 1; j <= prep.cap[static_cast<size_t>(e)]; ++j) {
        var_of_[static_cast<size_t>(e)][static_cast<size_t>(j - 1)] = static_cast<int>(cost.size());
        var_edge_.push_back(e);
        var_level_.push_back(j);
        cost.push_back(g_.edge(e).weight);
      }
    }
    const size_t n = cost.size();
    global_lo_.assign(n, 0.0);
    global_hi_.assign(n, 1.0);
    lp_ = std::make_unique<DualSimplex>(cost, global_lo_, global_hi_);
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      for (int j = 1; j < prep.cap[static_cast<size_t>(e)]; ++j) {
        lp_->AddRow({{Var(e, j), Var(e, j + 1)}, {1.0, -1.0}}, 0.0);
      }
    }
    // Every admissible path leaves u and enters v.
    for (size_t p = 0; p < prep.pairs.size(); ++p) {
      for (Vertex end : {prep.pairs[p].u, prep.pairs[p].v}) {
        std::vector<int> vars;
        for (const Incidence& inc : g_.neighbors(end)) {
          if (prep.usable[p][static_cast<size_t>(inc.edge)]) vars.push_back(Var(inc.edge, prep.pairs[p].level));
        }
        AddCut(std::move(vars));
      }
    }
  }

  ExactResult Run() {
    SeedIncumbent();
    ExactResult result;
    std::priority_queue<Node> open;
    open.push(Node{-kInfinity, 0, 0, {}});
    double proven = kInfinity;  // min bound among nodes cut off by a limit
    bool limited = false;
    while (!open.empty()) {
      Node node = open.top();
      open.pop();
      if (Prunable(node.bound)) continue;
      if (nodes_ >= options_.node_limit || OutOfTime()) {
        limited = true;
        proven = std::min(proven, node.bound);
        while (!open.empty()) {
          proven = std::min(proven, open.top().bound);
          open.pop();
        }
        break;
      }
      ++nodes_;
      Process(node, open);
    }
    result.nodes = nodes_;
    result.cuts = static_cast<std::int64_t>(cuts_.size());
    if (incumbent_.empty()) {
      // The all-max grading is feasible for a connected instance, so only a
      // limit can leave us without an incumbent.
      result.status = limited ? ExactStatus::kUnsolved : ExactStatus::kInfeasible;
      result.lower_bound = limited ? proven : kInfinity;
      return result;
    }
    result.solution = GradedSubgraph(incumbent_);
    if (!ValidateMlgs(*prep_.inst, result.solution).empty()) {
      throw SolverError("exact solver produced an invalid solution");
    }
    result.objective = SolutionCost(*prep_.inst, result.solution);
    result.status = limited ? ExactStatus::kUnsolved : ExactStatus::kOptimal;
    result.lower_bound = limited ? std::min(proven, result.objective) : result.objective;
    return result;
  }

 private:
  struct Node {
    double bound = 0.0;
    int depth = 0;
    std::int64_t seq = 0;
    std::vector<std::pair<int, int>> fixings;  // (var, value)
    double key = 0.0;

    // Best bound first; among equal bounds dive deeper, newest first.
    friend bool operator<(const Node& a, const Node& b) {
      if (a.key != b.key) return a.key > b.key;
      if (a.depth != b.depth) return a.depth < b.depth;
      return a.seq < b.seq;
    }
  };

  int Var(EdgeId e, int level) const {
    return var_of_[static_cast<size_t>(e)][static_cast<size_t>(level - 1)];
  }

  double RoundedBound(double bound) const {
    return integral_costs_ ? std::ceil(bound - kIntTol) : bound;
  }

  // No solution strictly cheaper than the incumbent has cost >= bound.
  bool Prunable(double bound) const {
    if (incumbent_.empty()) return false;
    return RoundedBound(bound) >= incumbent_cost_ - ToleranceFor(incumbent_cost_);
  }

  bool OutOfTime() const {
    if (options_.time_limit_seconds <= 0) return false;
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    return elapsed.count() > options_.time_limit_seconds;
  }

  bool AddCut(std::vector<int> vars) {
    std::sort(vars.begin(), vars.end());
    if (vars.empty() || !cuts_.insert(vars).second) return false;
    std::vector<double> ones(vars.size(), 1.0);
    lp_->AddRow({std::move(vars), std::move(ones)}, 1.0);
    return true;
  }

  void Offer(std::vector<int> y) {
    if (!improver_.Feasible(y)) return;
    std::vector<EdgeId> order(static_cast<size_t>(g_.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      return g_.edge(a).weight > g_.edge(b).weight;
    });
    improver_.Lower(y, order);
    double cost = 0.0;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) cost += g_.edge(e).weight * y[static_cast<size_t>(e)];
    if (incumbent_.empty() || cost < incumbent_cost_ - ToleranceFor(incumbent_cost_)) {
      incumbent_ = std::move(y);
      incumbent_cost_ = cost;
    }
  }

  void SeedIncumbent() {
    try {
      CombinedResult start = Combined(*prep_.inst, HeuristicSubsetSolver());
      Offer(std::vector<int>(start.solution.grades().begin(), start.solution.grades().end()));
    } catch (const DisconnectedError&) {
    }
    // Everything at its cap is feasible too and sometimes lowers better.
    Offer(prep_.cap);
  }

  // Grades from the support of the LP point.
  std::vector<int> SupportGrades(const std::vector<double>& x) const {
    std::vector<int> y(static_cast<size_t>(g_.edge_count()), 0);
    for (size_t v = 0; v < x.size(); ++v) {
      if (x[v] > kIntTol) {
        auto& yy = y[static_cast<size_t>(var_edge_[v])];
        yy = std::max(yy, var_level_[v]);
      }
    }
    return y;
  }

  bool Integral(const std::vector<double>& x) const {
    for (double v : x) {
      if (v > kIntTol && v < 1.0 - kIntTol) return false;
    }
    return true;
  }

  int Separate(const std::vector<double>& x) {
    int added = 0;
    std::vector<EdgeId> path;
    std::vector<EdgeId> blocking;
    std::vector<char> in_block(static_cast<size_t>(g_.edge_count()), 0);
    for (size_t p = 0; p < prep_.pairs.size(); ++p) {
      const PairInfo& pair = prep_.pairs[p];
      const auto& use = prep_.usable[p];
      auto value = [&](EdgeId e) { return x[static_cast<size_t>(Var(e, pair.level))]; };
      const double d = search_.Run(pair.u, pair.v, pair.budget, [&](EdgeId e) {
        return use[static_cast<size_t>(e)] && value(e) >= 1.0 - kIntTol;
      });
      if (LessOrEqual(d, pair.budget)) continue;

      // Grow a blocking set by cutting the cheapest edge of successive
      // admissible paths, then strip it down to a minimal one.
      blocking.clear();
      double sum = 0.0;
      bool hopeless = false;
      auto open = [&](EdgeId e) { return use[static_cast<size_t>(e)] && !in_block[static_cast<size_t>(e)]; };
      while (true) {
        const double len = search_.Run(pair.u, pair.v, pair.budget, open);
        if (!LessOrEqual(len, pair.budget)) break;
        search_.PathTo(pair.u, pair.v, path);
        EdgeId pick = path.front();
        for (EdgeId e : path) {
          if (value(e) < value(pick)) pick = e;
        }
        blocking.push_back(pick);
        in_block[static_cast<size_t>(pick)] = 1;
        sum += value(pick);
        if (sum > 2.0) {
          hopeless = true;
          break;
        }
      }
      if (!hopeless) {
        std::sort(blocking.begin(), blocking.end(), [&](EdgeId a, EdgeId b) { return value(a) > value(b); });
        for (EdgeId e : blocking) {
          in_block[static_cast<size_t>(e)] = 0;
          const double len = search_.Run(pair.u, pair.v, pair.budget, open);
          if (LessOrEqual(len, pair.budget)) in_block[static_cast<size_t>(e)] = 1;
        }
        std::vector<int> vars;
        double total = 0.0;
        for (EdgeId e : blocking) {
          if (!in_block[static_cast<size_t>(e)]) continue;
          vars.push_back(Var(e, pair.level));
          total += value(e);
        }
        if (total < 1.0 - kIntTol && AddCut(std::move(vars))) ++added;
      }
      for (EdgeId e : blocking) in_block[static_cast<size_t>(e)] = 0;
    }
    return added;
  }

  // Sets the LP bounds for `node`; false if its fixings contradict.
  bool ApplyBounds(const Node& node) {
    lo_ = global_lo_;
    hi_ = global_hi_;
    for (auto [var, value] : node.fixings) {
      const EdgeId e = var_edge_[static_cast<size_t>(var)];
      const int level = var_level_[static_cast<size_t>(var)];
      const int cap = prep_.cap[static_cast<size_t>(e)];
      if (value == 1) {
        for (int j = 1; j <= level; ++j) lo_[static_cast<size_t>(Var(e, j))] = 1.0;
      } else {
        for (int j = level; j <= cap; ++j) hi_[static_cast<size_t>(Var(e, j))] = 0.0;
      }
    }
    for (size_t v = 0; v < lo_.size(); ++v) {
      if (lo_[v] > hi_[v]) return false;
    }
    for (size_t v = 0; v < lo_.size(); ++v) lp_->SetBounds(static_cast<int>(v), lo_[v], hi_[v]);
    return true;
  }

  void Process(const Node& node, std::priority_queue<Node>& open) {
    if (!ApplyBounds(node)) return;
    const bool root = node.depth == 0;
    double bound = node.bound;
    std::vector<double> history;
    while (true) {
      const auto status = lp_->Solve();
      if (status == DualSimplex::Status::kInfeasible) return;
      if (status == DualSimplex::Status::kIterationLimit) throw SolverError("LP iteration limit reached");
      bound = std::max(bound, lp_->lower_bound());
      if (Prunable(bound)) return;
      const std::vector<double>& x = lp_->primal();
      const int added = Separate(x);
      if (added == 0) break;
      history.push_back(bound);
      // Stop cutting once the bound stalls, unless the point is integral
      // (then separation is exact and must run to completion).
      const size_t window = root ? 10 : 3;
      if (history.size() > window && !Integral(x) &&
          history.back() - history[history.size() - 1 - window] < 1e-3 * std::max(1.0, std::abs(bound))) {
        break;
      }
    }
    const std::vector<double> x = lp_->primal();
    if (Integral(x) && Separate(x) == 0) {
      Offer(SupportGrades(x));
      return;
    }
    if (root || node.depth <= 8 || nodes_ % 16 == 0) Offer(SupportGrades(x));
    if (Prunable(bound)) return;

    // Reduced-cost fixing.
    std::vector<std::pair<int, int>> implied;
    for (size_t v = 0; v < x.size(); ++v) {
      if (lo_[v] == hi_[v]) continue;
      const auto rc = lp_->reduced_cost(static_cast<int>(v));
      if (!rc.at_bound || rc.value <= 0.0 || !Prunable(bound + rc.value)) continue;
      const int value = rc.at_upper ? 1 : 0;
      if (root) {
        (value == 1 ? global_lo_ : global_hi_)[v] = value;
      } else {
        implied.push_back({static_cast<int>(v), value});
      }
    }

    int branch = -1;
    double best = -1.0;
    for (size_t v = 0; v < x.size(); ++v) {
      const double frac = std::min(x[v], 1.0 - x[v]);
      if (frac <= kIntTol) continue;
      const double score = frac * g_.edge(var_edge_[v]).weight;
      if (score > best) {
        best = score;
        branch = static_cast<int>(v);
      }
    }
    if (branch < 0) {
      // Integral but a cut was still found: re-solve this node.
      open.push(MakeChild(node, bound, implied, -1, 0));
      return;
    }
    open.push(MakeChild(node, bound, implied, branch, 0));
    open.push(MakeChild(node, bound, implied, branch, 1));
  }

  Node MakeChild(const Node& parent, double bound, const std::vector<std::pair<int, int>>& implied,
                 int var, int value) {
    Node child;
    child.bound = bound;
    child.key = RoundedBound(bound);
    child.depth = parent.depth + 1;
    child.seq = ++seq_;
    child.fixings = parent.fixings;
    child.fixings.insert(child.fixings.end(), implied.begin(), implied.end());
    if (var >= 0) child.fixings.push_back({var, value});
    return child;
  }

  const Prepared& prep_;
  const Graph& g_;
  ExactOptions options_;
  PathSearch search_;
  GradeImprover improver_;
  std::chrono::steady_clock::time_point start_;
  bool integral_costs_ = true;
  std::vector<std::vector<int>> var_of_;
  std::vector<EdgeId> var_edge_;
  std::vector<int> var_level_;
  std::vector<double> global_lo_;
  std::vector<double> global_hi_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::unique_ptr<DualSimplex> lp_;
  std::set<std::vector<int>> cuts_;
  std::vector<int> incumbent_;
  double incumbent_cost_ = kInfinity;
  std::int64_t nodes_ = 0;
  std::int64_t seq_ = 0;
};

ExactResult Infeasible() {
  ExactResult r;
  r.status = ExactStatus::kInfeasible;
  r.lower_bound = kInfinity;
  return r;
}

}  // namespace

ExactResult SolveExact(const MlgsInstance& inst, const ExactOptions& options) {
  ValidateInstance(inst);
  const Prepared prep = Prepare(inst);
  if (prep.disconnected) return Infeasible();
  return BranchAndCut(prep, options).Run();
}

ExactResult BruteForceOracle(const MlgsInstance& inst) {
  ValidateInstance(inst);
  const Graph& g = inst.graph;
  const int levels = inst.level_count();
  const int m = g.edge_count();
  double space = 1.0;
  for (int i = 0; i < m; ++i) space *= levels + 1;
  if (space > static_cast<double>(1 << 24)) {
    throw ArgumentError("brute force refuses more than 2^24 grade vectors");
  }
  const int n = g.vertex_count();
  const DistanceMatrix base = AllPairsDistances(g);
  struct Requirement {
    Vertex u, v;
    int level;
    double budget;
  };
  std::vector<Requirement> reqs;
  const std::vector<int> required = inst.RequiredGrades();
  const auto t1 = inst.level(1);
  for (size_t a = 0; a < t1.size(); ++a) {
    for (size_t b = a + 1; b < t1.size(); ++b) {
      const Vertex u = t1[a];
      const Vertex v = t1[b];
      if (base(u, v) == kInfinity) return Infeasible();
      reqs.push_back({u, v, std::min(required[static_cast<size_t>(u)], required[static_cast<size_t>(v)]),
                      inst.stretch * base(u, v)});
    }
  }

  // Floyd-Warshall per level; independent of the Dijkstra code paths.
  std::vector<double> d(static_cast<size_t>(n) * static_cast<size_t>(n));
  auto feasible = [&](const std::vector<int>& y) {
    for (int level = 1; level <= levels; ++level) {
      std::fill(d.begin(), d.end(), kInfinity);
      for (int i = 0; i < n; ++i) d[static_cast<size_t>(i * n + i)] = 0.0;
      for (EdgeId e = 0; e < m; ++e) {
        if (y[static_cast<size_t>(e)] < level) continue;
        const Edge& edge = g.edge(e);
        const size_t uv = static_cast<size_t>(edge.u * n + edge.v);
        const size_t vu = static_cast<size_t>(edge.v * n + edge.u);
        d[uv] = std::min(d[uv], edge.weight);
        d[vu] = std::min(d[vu], edge.weight);
      }
      for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
          const double dik = d[static_cast<size_t>(i * n + k)];
          if (dik == kInfinity) continue;
          for (int j = 0; j < n; ++j) {
            const double cand = dik + d[static_cast<size_t>(k * n + j)];
            if (cand < d[static_cast<size_t>(i * n + j)]) d[static_cast<size_t>(i * n + j)] = cand;
          }
        }
      }
      for (const Requirement& r : reqs) {
        if (r.level < level) continue;
        if (!LessOrEqual(d[static_cast<size_t>(r.u * n + r.v)], r.budget)) return false;
      }
    }
    return true;
  };

  std::vector<int> best(static_cast<size_t>(m), levels);
  if (!feasible(best)) return Infeasible();
  double best_cost = 0.0;
  for (EdgeId e = 0; e < m; ++e) best_cost += g.edge(e).weight * levels;

  // Odometer in lexicographic order, edge 0 most significant. Only strictly
  // cheaper vectors (or the starting placeholder itself) replace the best,
  // so the lexicographically first minimum survives.
  std::vector<int> y(static_cast<size_t>(m), 0);
  bool placeholder = true;
  while (true) {
    double cost = 0.0;
    for (EdgeId e = 0; e < m; ++e) cost += g.edge(e).weight * y[static_cast<size_t>(e)];
    const bool cheaper = cost < best_cost && !ApproxEqual(cost, best_cost);
    const bool tie_with_placeholder = placeholder && ApproxEqual(cost, best_cost);
    if ((cheaper || tie_with_placeholder) && feasible(y)) {
      best = y;
      best_cost = cost;
      placeholder = false;
    }
    int pos = m - 1;
    while (pos >= 0 && y[static_cast<size_t>(pos)] == levels) y[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++y[static_cast<size_t>(pos)];
  }

  ExactResult result;
  result.status = ExactStatus::kOptimal;
  result.solution = GradedSubgraph(best);
  result.objective = SolutionCost(inst, result.solution);
  result.lower_bound = result.objective;
  return result;
}

SubsetSolver ExactSubsetSolver(const ExactOptions& options) {
  return {SubsetSolverStrategy::kExact,
          [options](const Graph& g, std::span<const Vertex> terminals, double t) {
            if (terminals.size() < 2) return EdgeSet(g);
            MlgsInstance single;
            single.graph = g;
            single.terminals.emplace_back(terminals.begin(), terminals.end());
            std::sort(single.terminals[0].begin(), single.terminals[0].end());
            single.stretch = t;
            const ExactResult r = SolveExact(single, options);
            if (r.status == ExactStatus::kInfeasible) {
              throw DisconnectedError(terminals.front(), terminals.back());
            }
            if (r.status != ExactStatus::kOptimal) {
              throw SolverError("exact subsetwise solve hit its limit");
            }
            return r.solution.LevelEdges(1);
          }};
}

SubsetSolver MakeSubsetSolver(SubsetSolverStrategy strategy, const ExactOptions& options) {
  return strategy == SubsetSolverStrategy::kExact ? ExactSubsetSolver(options) : HeuristicSubsetSolver();
}

}  // namespace mlspanner::ilp
