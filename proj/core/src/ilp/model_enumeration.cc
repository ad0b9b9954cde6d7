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

#include "mlspanner/ilp/model_enumeration.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "mlspanner/errors.h"

namespace mlspanner::ilp {
namespace {

double Tol(double rhs) { return 1e-9 * std::max(1.0, std::abs(rhs)); }

int Lower(const Variable& v) { return static_cast<int>(std::ceil(v.lower - 1e-9)); }
int Upper(const Variable& v) { return static_cast<int>(std::floor(v.upper + 1e-9)); }

// A row restricted to one block's variables (by local position).
struct LocalRow {
  std::vector<std::pair<int, double>> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  int linking = -1;  // linking position, -1 for block-internal rows
  double linking_coef = 0.0;
};

// Bounds one block assignment places on the linking variables, plus that
// assignment (for reporting a complete solution).
struct Requirement {
  std::vector<int> lo;
  std::vector<int> hi;
  std::vector<int> witness;
};

class BlockEnumerator {
 public:
  BlockEnumerator(const IlpModel& model, const std::vector<int>& vars, std::vector<LocalRow> rows,
                  const std::vector<int>& linking_lo, const std::vector<int>& linking_hi,
                  std::int64_t limit)
      : vars_(vars), rows_(std::move(rows)), linking_lo_(linking_lo), linking_hi_(linking_hi),
        limit_(limit) {
    for (int v : vars) {
      lb_.push_back(Lower(model.variable(v)));
      ub_.push_back(Upper(model.variable(v)));
    }
    by_var_.resize(vars.size());
    partial_.assign(rows_.size(), 0.0);
    rem_min_.assign(rows_.size(), 0.0);
    rem_max_.assign(rows_.size(), 0.0);
    for (size_t r = 0; r < rows_.size(); ++r) {
      for (auto [pos, coef] : rows_[r].terms) {
        by_var_[static_cast<size_t>(pos)].push_back({static_cast<int>(r), coef});
        rem_min_[r] += std::min(coef * lb_[static_cast<size_t>(pos)], coef * ub_[static_cast<size_t>(pos)]);
        rem_max_[r] += std::max(coef * lb_[static_cast<size_t>(pos)], coef * ub_[static_cast<size_t>(pos)]);
      }
    }
    value_.assign(vars.size(), 0);
  }

  std::vector<Requirement> Run() {
    Dfs(0);
    std::vector<Requirement> unique;
    unique.reserve(found_.size());
    for (auto& [key, req] : found_) unique.push_back(std::move(req));
    // Drop requirements that are at least as restrictive as another one.
    std::vector<bool> dropped(unique.size(), false);
    for (size_t a = 0; a < unique.size(); ++a) {
      if (dropped[a]) continue;
      for (size_t b = 0; b < unique.size(); ++b) {
        if (a == b || dropped[b]) continue;
        if (Contains(unique[a], unique[b])) dropped[b] = true;
      }
    }
    std::vector<Requirement> out;
    for (size_t i = 0; i < unique.size(); ++i) {
      if (!dropped[i]) out.push_back(std::move(unique[i]));
    }
    return out;
  }

 private:
  static bool Contains(const Requirement& wide, const Requirement& narrow) {
    for (size_t k = 0; k < wide.lo.size(); ++k) {
      if (wide.lo[k] > narrow.lo[k] || wide.hi[k] < narrow.hi[k]) return false;
    }
    return true;
  }

  bool RowStillPossible(size_t r) const {
    const LocalRow& row = rows_[r];
    if (row.linking >= 0) return true;  // depends on linking values
    const double tol = Tol(row.rhs);
    const double low = partial_[r] + rem_min_[r];
    const double high = partial_[r] + rem_max_[r];
    switch (row.sense) {
      case Sense::kLessEqual: return low <= row.rhs + tol;
      case Sense::kGreaterEqual: return high >= row.rhs - tol;
      case Sense::kEqual: return low <= row.rhs + tol && high >= row.rhs - tol;
    }
    return true;
  }

  void Dfs(size_t pos) {
    if (pos == vars_.size()) {
      Record();
      return;
    }
    for (int x = lb_[pos]; x <= ub_[pos]; ++x) {
      value_[pos] = x;
      bool ok = true;
      for (auto [r, coef] : by_var_[pos]) {
        const size_t ru = static_cast<size_t>(r);
        partial_[ru] += coef * x;
        rem_min_[ru] -= std::min(coef * lb_[pos], coef * ub_[pos]);
        rem_max_[ru] -= std::max(coef * lb_[pos], coef * ub_[pos]);
      }
      for (auto [r, coef] : by_var_[pos]) ok = ok && RowStillPossible(static_cast<size_t>(r));
      if (ok) Dfs(pos + 1);
      for (auto [r, coef] : by_var_[pos]) {
        const size_t ru = static_cast<size_t>(r);
        partial_[ru] -= coef * x;
        rem_min_[ru] += std::min(coef * lb_[pos], coef * ub_[pos]);
        rem_max_[ru] += std::max(coef * lb_[pos], coef * ub_[pos]);
      }
    }
  }

  void Record() {
    Requirement req{linking_lo_, linking_hi_, value_};
    for (size_t r = 0; r < rows_.size(); ++r) {
      const LocalRow& row = rows_[r];
      if (row.linking < 0) continue;
      // row: partial + b*y (sense) rhs  =>  bound on y.
      const double rest = row.rhs - partial_[r];
      const double b = row.linking_coef;
      const double q = rest / b;
      const double tol = Tol(row.rhs) / std::abs(b);
      const bool upper_bound = (row.sense == Sense::kLessEqual) == (b > 0);
      int& lo = req.lo[static_cast<size_t>(row.linking)];
      int& hi = req.hi[static_cast<size_t>(row.linking)];
      if (row.sense == Sense::kEqual || upper_bound) {
        hi = std::min(hi, static_cast<int>(std::floor(q + tol)));
      }
      if (row.sense == Sense::kEqual || !upper_bound) {
        lo = std::max(lo, static_cast<int>(std::ceil(q - tol)));
      }
      if (lo > hi) return;
    }
    if (static_cast<std::int64_t>(++count_) > limit_) {
      throw SolverError("block enumeration exceeded its assignment limit");
    }
    std::vector<int> key = req.lo;
    key.insert(key.end(), req.hi.begin(), req.hi.end());
    found_.emplace(std::move(key), std::move(req));
  }

  std::vector<int> vars_;
  std::vector<LocalRow> rows_;
  std::vector<int> linking_lo_;
  std::vector<int> linking_hi_;
  std::int64_t limit_;
  std::vector<int> lb_;
  std::vector<int> ub_;
  std::vector<std::vector<std::pair<int, double>>> by_var_;
  std::vector<double> partial_;
  std::vector<double> rem_min_;
  std::vector<double> rem_max_;
  std::vector<int> value_;
  std::int64_t count_ = 0;
  std::map<std::vector<int>, Requirement> found_;
};

class LinkingSearch {
 public:
  LinkingSearch(std::vector<int> lo, std::vector<int> hi, std::vector<double> cost,
                std::vector<LocalRow> rows, std::vector<std::vector<Requirement>> blocks,
                std::int64_t max_nodes)
      : lo_(std::move(lo)), hi_(std::move(hi)), cost_(std::move(cost)), rows_(std::move(rows)),
        blocks_(std::move(blocks)), max_nodes_(max_nodes) {
    const size_t n = lo_.size();
    suffix_min_.assign(n + 1, 0.0);
    for (size_t k = n; k-- > 0;) {
      suffix_min_[k] = suffix_min_[k + 1] + std::min(cost_[k] * lo_[k], cost_[k] * hi_[k]);
    }
    check_at_.resize(n);
    for (size_t r = 0; r < rows_.size(); ++r) {
      int last = -1;
      for (auto [pos, coef] : rows_[r].terms) last = std::max(last, pos);
      if (last < 0) {
        if (!Holds(0.0, rows_[r])) trivially_infeasible_ = true;
        continue;
      }
      check_at_[static_cast<size_t>(last)].push_back(static_cast<int>(r));
    }
    value_.assign(n, 0);
  }

  bool Run() {
    if (trivially_infeasible_) return false;
    std::vector<std::vector<int>> alive(blocks_.size());
    for (size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].empty()) return false;
      for (size_t i = 0; i < blocks_[b].size(); ++i) alive[b].push_back(static_cast<int>(i));
    }
    Dfs(0, 0.0, alive);
    return found_;
  }

  double best_cost() const { return best_cost_; }
  const std::vector<int>& best_values() const { return best_values_; }
  const std::vector<int>& best_witnesses() const { return best_witness_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  static bool Holds(double lhs, const LocalRow& row) {
    const double tol = Tol(row.rhs);
    switch (row.sense) {
      case Sense::kLessEqual: return lhs <= row.rhs + tol;
      case Sense::kGreaterEqual: return lhs >= row.rhs - tol;
      case Sense::kEqual: return std::abs(lhs - row.rhs) <= tol;
    }
    return false;
  }

  void Dfs(size_t pos, double cost, const std::vector<std::vector<int>>& alive) {
    if (++nodes_ > max_nodes_) throw SolverError("linking enumeration exceeded its node limit");
    if (found_ && cost + suffix_min_[pos] >= best_cost_ - Tol(best_cost_)) return;
    if (pos == lo_.size()) {
      found_ = true;
      best_cost_ = cost;
      best_values_ = value_;
      best_witness_.clear();
      for (const auto& ids : alive) best_witness_.push_back(ids.front());
      return;
    }
    for (int x = lo_[pos]; x <= hi_[pos]; ++x) {
      value_[pos] = x;
      bool ok = true;
      for (int r : check_at_[pos]) {
        double lhs = 0.0;
        for (auto [p, coef] : rows_[static_cast<size_t>(r)].terms) lhs += coef * value_[static_cast<size_t>(p)];
        if (!Holds(lhs, rows_[static_cast<size_t>(r)])) ok = false;
      }
      if (!ok) continue;
      std::vector<std::vector<int>> next(alive.size());
      for (size_t b = 0; b < alive.size() && ok; ++b) {
        for (int id : alive[b]) {
          const Requirement& req = blocks_[b][static_cast<size_t>(id)];
          if (req.lo[pos] <= x && x <= req.hi[pos]) next[b].push_back(id);
        }
        ok = !next[b].empty();
      }
      if (ok) Dfs(pos + 1, cost + cost_[pos] * x, next);
    }
  }

  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<double> cost_;
  std::vector<LocalRow> rows_;
  std::vector<std::vector<Requirement>> blocks_;
  std::int64_t max_nodes_;
  std::vector<double> suffix_min_;
  std::vector<std::vector<int>> check_at_;
  std::vector<int> value_;
  bool trivially_infeasible_ = false;
  bool found_ = false;
  double best_cost_ = std::numeric_limits<double>::infinity();
  std::vector<int> best_values_;
  std::vector<int> best_witness_;
  std::int64_t nodes_ = 0;
};

}  // namespace

EnumerationResult SolveModelExhaustive(const IlpModel& model, const EnumerationLimits& limits) {
  const int n = model.variable_count();
  // Local positions: linking variables in index order, block variables in
  // index order within their block.
  std::vector<int> linking;
  std::map<int, std::vector<int>> block_vars;
  std::vector<int> local(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const Variable& var = model.variable(v);
    if (Lower(var) > Upper(var)) return {};
    if (var.block < 0) {
      local[static_cast<size_t>(v)] = static_cast<int>(linking.size());
      linking.push_back(v);
    } else {
      auto& list = block_vars[var.block];
      local[static_cast<size_t>(v)] = static_cast<int>(list.size());
      list.push_back(v);
    }
  }
  std::map<int, int> block_index;
  for (const auto& [id, vars] : block_vars) block_index.emplace(id, static_cast<int>(block_index.size()));

  std::vector<double> cost(linking.size(), 0.0);
  for (const Term& t : model.objective()) {
    if (model.variable(t.var).block >= 0) throw ArgumentError("objective touches a block variable");
    cost[static_cast<size_t>(local[static_cast<size_t>(t.var)])] += t.coef;
  }

  std::vector<LocalRow> linking_rows;
  std::vector<std::vector<LocalRow>> block_rows(block_vars.size());
  for (const Constraint& c : model.constraints()) {
    int block = -1;
    std::vector<std::pair<int, double>> block_terms;
    std::vector<std::pair<int, double>> linking_terms;
    for (const Term& t : c.terms) {
      const int b = model.variable(t.var).block;
      const int pos = local[static_cast<size_t>(t.var)];
      if (b < 0) {
        linking_terms.push_back({pos, t.coef});
        continue;
      }
      if (block >= 0 && b != block) throw ArgumentError("constraint " + c.name + " spans two blocks");
      block = b;
      block_terms.push_back({pos, t.coef});
    }
    if (block < 0) {
      linking_rows.push_back({std::move(linking_terms), c.sense, c.rhs});
      continue;
    }
    LocalRow row{std::move(block_terms), c.sense, c.rhs};
    if (linking_terms.size() > 1) {
      throw ArgumentError("constraint " + c.name + " couples a block to several linking variables");
    }
    if (linking_terms.size() == 1) {
      if (linking_terms[0].second == 0.0) throw ArgumentError("zero coupling coefficient in " + c.name);
      row.linking = linking_terms[0].first;
      row.linking_coef = linking_terms[0].second;
    }
    block_rows[static_cast<size_t>(block_index.at(block))].push_back(std::move(row));
  }

  std::vector<int> lo, hi;
  for (int v : linking) {
    lo.push_back(Lower(model.variable(v)));
    hi.push_back(Upper(model.variable(v)));
  }
  std::vector<std::vector<Requirement>> requirements;
  for (const auto& [id, vars] : block_vars) {
    BlockEnumerator enumerator(model, vars, std::move(block_rows[static_cast<size_t>(block_index.at(id))]),
                               lo, hi, limits.max_block_assignments);
    requirements.push_back(enumerator.Run());
  }

  LinkingSearch search(lo, hi, cost, std::move(linking_rows), requirements, limits.max_nodes);
  EnumerationResult result;
  result.feasible = search.Run();
  result.nodes = search.nodes();
  if (!result.feasible) return result;
  result.objective = search.best_cost();
  result.values.assign(static_cast<size_t>(n), 0.0);
  for (size_t k = 0; k < linking.size(); ++k) {
    result.values[static_cast<size_t>(linking[k])] = search.best_values()[k];
  }
  size_t b = 0;
  for (const auto& [id, vars] : block_vars) {
    const Requirement& req = requirements[b][static_cast<size_t>(search.best_witnesses()[b])];
    for (size_t k = 0; k < vars.size(); ++k) result.values[static_cast<size_t>(vars[k])] = req.witness[k];
    ++b;
  }
  if (!model.IsFeasible(result.values)) throw SolverError("enumeration produced an infeasible assignment");
  return result;
}

}  // namespace mlspanner::ilp
