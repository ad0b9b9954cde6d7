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

#include "mlspanner/ilp/dual_simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mlspanner/errors.h"

namespace mlspanner::ilp {
namespace {

constexpr double kPrimalTol = 1e-9;
constexpr double kPivotTol = 1e-9;
constexpr double kHarrisTol = 1e-11;
constexpr int kRefactorPeriod = 200;

}  // namespace

DualSimplex::DualSimplex(std::vector<double> cost, std::vector<double> lo, std::vector<double> hi)
    : n_(static_cast<int>(cost.size())), true_cost_(cost), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != cost.size() || hi_.size() != cost.size()) {
    throw ArgumentError("bounds do not match the cost vector");
  }
  cost_ = std::move(cost);
  for (int j = 0; j < n_; ++j) {
    const size_t u = static_cast<size_t>(j);
    if (!std::isfinite(lo_[u]) || !std::isfinite(hi_[u]) || lo_[u] > hi_[u]) {
      throw ArgumentError("variable bounds must be finite and ordered");
    }
    // Deterministic spread in [1, 2) so no two costs tie by accident.
    const double spread = 1.0 + std::fmod(0.6180339887498949 * (j + 1), 1.0);
    const double delta = 1e-8 * spread * std::max(1.0, std::abs(cost_[u]));
    cost_[u] += cost_[u] < 0 ? -delta : delta;
  }
  position_.assign(static_cast<size_t>(2 * n_), -1);
  basis_.resize(static_cast<size_t>(n_));
  binv_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0.0);
  lambda_.resize(static_cast<size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    const size_t u = static_cast<size_t>(j);
    const bool at_upper = cost_[u] < 0;
    basis_[u] = at_upper ? n_ + j : j;
    position_[static_cast<size_t>(basis_[u])] = j;
    binv_[u * static_cast<size_t>(n_) + u] = at_upper ? -1.0 : 1.0;
    lambda_[u] = std::abs(cost_[u]);
  }
  x_.assign(static_cast<size_t>(n_), 0.0);
}

int DualSimplex::AddRow(SparseRow row, double rhs) {
  if (row.index.size() != row.value.size()) throw ArgumentError("malformed sparse row");
  double norm = 0.0;
  for (size_t i = 0; i < row.index.size(); ++i) {
    if (row.index[i] < 0 || row.index[i] >= n_) throw ArgumentError("row references an unknown variable");
    norm += row.value[i] * row.value[i];
  }
  rows_.push_back({std::move(row), rhs, std::max(std::sqrt(norm), 1e-12)});
  position_.push_back(-1);
  return row_count() - 1;
}

void DualSimplex::SetBounds(int j, double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw ArgumentError("variable bounds must be finite and ordered");
  }
  lo_[static_cast<size_t>(j)] = lo;
  hi_[static_cast<size_t>(j)] = hi;
}

double DualSimplex::Activity(int id) const {
  if (id < n_) return x_[static_cast<size_t>(id)];
  if (id < 2 * n_) return -x_[static_cast<size_t>(id - n_)];
  const SparseRow& a = rows_[static_cast<size_t>(id - 2 * n_)].a;
  double sum = 0.0;
  for (size_t i = 0; i < a.index.size(); ++i) sum += a.value[i] * x_[static_cast<size_t>(a.index[i])];
  return sum;
}

double DualSimplex::Rhs(int id) const {
  if (id < n_) return lo_[static_cast<size_t>(id)];
  if (id < 2 * n_) return -hi_[static_cast<size_t>(id - n_)];
  return rows_[static_cast<size_t>(id - 2 * n_)].rhs;
}

double DualSimplex::Norm(int id) const {
  return id < 2 * n_ ? 1.0 : rows_[static_cast<size_t>(id - 2 * n_)].norm;
}

// alpha = B^{-T} a_id, i.e. alpha_k = sum_i a_i * Binv[i][k].
void DualSimplex::Alpha(int id, std::vector<double>& alpha) const {
  const size_t n = static_cast<size_t>(n_);
  alpha.assign(n, 0.0);
  auto add_row = [&](int i, double coef) {
    const double* r = &binv_[static_cast<size_t>(i) * n];
    for (size_t k = 0; k < n; ++k) alpha[k] += coef * r[k];
  };
  if (id < n_) {
    add_row(id, 1.0);
  } else if (id < 2 * n_) {
    add_row(id - n_, -1.0);
  } else {
    const SparseRow& a = rows_[static_cast<size_t>(id - 2 * n_)].a;
    for (size_t i = 0; i < a.index.size(); ++i) add_row(a.index[i], a.value[i]);
  }
}

void DualSimplex::Refactor() {
  const size_t n = static_cast<size_t>(n_);
  // Gauss-Jordan on [B | I]; basis rows are mostly unit vectors, so rows
  // with a zero in the pivot column are skipped.
  std::vector<double> m(n * n, 0.0);
  for (size_t k = 0; k < n; ++k) {
    const int id = basis_[k];
    double* row = &m[k * n];
    if (id < n_) {
      row[static_cast<size_t>(id)] = 1.0;
    } else if (id < 2 * n_) {
      row[static_cast<size_t>(id - n_)] = -1.0;
    } else {
      const SparseRow& a = rows_[static_cast<size_t>(id - 2 * n_)].a;
      for (size_t i = 0; i < a.index.size(); ++i) row[static_cast<size_t>(a.index[i])] += a.value[i];
    }
  }
  std::vector<double> inv(n * n, 0.0);
  for (size_t k = 0; k < n; ++k) inv[k * n + k] = 1.0;
  // Column c is eliminated with pivot row pr; afterwards we know
  // variable c is determined by basis row `owner[c]`.
  std::vector<size_t> owner(n);
  std::vector<bool> used(n, false);
  for (size_t c = 0; c < n; ++c) {
    size_t pr = n;
    double best = 0.0;
    for (size_t r = 0; r < n; ++r) {
      if (used[r]) continue;
      const double v = std::abs(m[r * n + c]);
      if (v > best) {
        best = v;
        pr = r;
      }
    }
    if (pr == n || best < 1e-12) throw SolverError("singular basis in dual simplex");
    used[pr] = true;
    owner[c] = pr;
    const double piv = m[pr * n + c];
    for (size_t j = 0; j < n; ++j) {
      m[pr * n + j] /= piv;
      inv[pr * n + j] /= piv;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == pr) continue;
      const double f = m[r * n + c];
      if (f == 0.0) continue;
      for (size_t j = 0; j < n; ++j) {
        m[r * n + j] -= f * m[pr * n + j];
        inv[r * n + j] -= f * inv[pr * n + j];
      }
    }
  }
  // Row owner[c] of `inv` now expresses x_c in terms of b_S, i.e. it is row c
  // of B^{-1}.
  for (size_t c = 0; c < n; ++c) {
    std::copy(&inv[owner[c] * n], &inv[owner[c] * n] + n, &binv_[c * n]);
  }
  since_refactor_ = 0;
}

void DualSimplex::RecomputePrimal() {
  const size_t n = static_cast<size_t>(n_);
  std::vector<double> b(n);
  for (size_t k = 0; k < n; ++k) b[k] = Rhs(basis_[k]);
  for (size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    const double* r = &binv_[i * n];
    for (size_t k = 0; k < n; ++k) sum += r[k] * b[k];
    x_[i] = sum;
  }
}

void DualSimplex::RecomputeDual() {
  const size_t n = static_cast<size_t>(n_);
  std::fill(lambda_.begin(), lambda_.end(), 0.0);
  for (size_t i = 0; i < n; ++i) {
    const double c = cost_[i];
    if (c == 0.0) continue;
    const double* r = &binv_[i * n];
    for (size_t k = 0; k < n; ++k) lambda_[k] += c * r[k];
  }
  for (double& l : lambda_) l = std::max(l, 0.0);
}

DualSimplex::Status DualSimplex::Solve(std::int64_t max_iterations) {
  const size_t n = static_cast<size_t>(n_);
  RecomputePrimal();
  std::vector<double> alpha;
  std::vector<double> column(n);
  for (std::int64_t it = 0;; ++it) {
    if (it >= max_iterations) return Status::kIterationLimit;
    // Most violated constraint, scaled by its norm.
    int entering = -1;
    double best = 0.0;
    const int total = 2 * n_ + row_count();
    for (int id = 0; id < total; ++id) {
      if (position_[static_cast<size_t>(id)] >= 0) continue;
      const double rhs = Rhs(id);
      const double viol = rhs - Activity(id);
      if (viol <= kPrimalTol * (1.0 + std::abs(rhs))) continue;
      const double score = viol / Norm(id);
      if (score > best) {
        best = score;
        entering = id;
      }
    }
    if (entering < 0) return Status::kOptimal;

    Alpha(entering, alpha);
    // Two-pass (Harris) ratio test keeps the dual feasible within
    // kHarrisTol while preferring large pivots.
    double bound = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < n; ++k) {
      if (alpha[k] > kPivotTol) bound = std::min(bound, (lambda_[k] + kHarrisTol) / alpha[k]);
    }
    if (bound == std::numeric_limits<double>::infinity()) return Status::kInfeasible;
    size_t leave = n;
    for (size_t k = 0; k < n; ++k) {
      if (alpha[k] > kPivotTol && lambda_[k] / alpha[k] <= bound &&
          (leave == n || alpha[k] > alpha[leave])) {
        leave = k;
      }
    }
    const double theta = std::max(0.0, lambda_[leave] / alpha[leave]);
    for (size_t k = 0; k < n; ++k) lambda_[k] = std::max(0.0, lambda_[k] - theta * alpha[k]);
    lambda_[leave] = theta;

    for (size_t i = 0; i < n; ++i) column[i] = binv_[i * n + leave];
    const double step = (Rhs(entering) - Activity(entering)) / alpha[leave];
    for (size_t i = 0; i < n; ++i) x_[i] += step * column[i];

    // Binv' = Binv - column (alpha - e_leave)^T / alpha_leave.
    const double inv_pivot = 1.0 / alpha[leave];
    alpha[leave] -= 1.0;
    for (size_t i = 0; i < n; ++i) {
      const double f = column[i] * inv_pivot;
      if (f == 0.0) continue;
      double* r = &binv_[i * n];
      for (size_t k = 0; k < n; ++k) r[k] -= f * alpha[k];
    }

    position_[static_cast<size_t>(basis_[leave])] = -1;
    basis_[leave] = entering;
    position_[static_cast<size_t>(entering)] = static_cast<int>(leave);
    ++iterations_;
    if (++since_refactor_ >= kRefactorPeriod) {
      Refactor();
      RecomputePrimal();
      RecomputeDual();
    }
  }
}

double DualSimplex::objective() const {
  double sum = 0.0;
  for (size_t j = 0; j < x_.size(); ++j) sum += true_cost_[j] * x_[j];
  return sum;
}

double DualSimplex::lower_bound() const {
  double perturbed = 0.0;
  double slack = 0.0;
  for (size_t j = 0; j < x_.size(); ++j) {
    perturbed += cost_[j] * x_[j];
    slack += std::abs(cost_[j] - true_cost_[j]) * std::max(std::abs(lo_[j]), std::abs(hi_[j]));
  }
  return perturbed - slack - 1e-9 * std::max(1.0, std::abs(perturbed));
}

DualSimplex::ReducedCost DualSimplex::reduced_cost(int j) const {
  const int lower_pos = position_[static_cast<size_t>(j)];
  if (lower_pos >= 0) return {lambda_[static_cast<size_t>(lower_pos)], false, true};
  const int upper_pos = position_[static_cast<size_t>(n_ + j)];
  if (upper_pos >= 0) return {lambda_[static_cast<size_t>(upper_pos)], true, true};
  return {};
}

}  // namespace mlspanner::ilp
