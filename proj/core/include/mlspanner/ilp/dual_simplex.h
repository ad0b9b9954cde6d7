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

#ifndef MLSPANNER_ILP_DUAL_SIMPLEX_H_
#define MLSPANNER_ILP_DUAL_SIMPLEX_H_

#include <cstdint>
#include <vector>

namespace mlspanner::ilp {

struct SparseRow {
  std::vector<int> index;
  std::vector<double> value;
};

// Dense dual simplex for
//
//   min c^T x   s.t.   a_i^T x >= b_i,   lo <= x <= hi   (finite bounds)
//
// in row-basis form: a basis is n tight constraints (rows or bounds) and its
// n x n inverse is kept explicitly, so the cost per pivot is O(n^2)
// regardless of how many rows have been added. Built for cutting-plane
// loops: adding rows and changing bounds keep the current basis dual
// feasible, so re-solves are warm. Costs must be non-negative.
//
// Costs are perturbed by < 1e-8 relative to break dual degeneracy;
// objective() reports the unperturbed value and lower_bound() a value that
// is guaranteed not to exceed the true optimum.
class DualSimplex {
 public:
  enum class Status { kOptimal, kInfeasible, kIterationLimit };

  DualSimplex(std::vector<double> cost, std::vector<double> lo, std::vector<double> hi);

  int variable_count() const { return n_; }
  int row_count() const { return static_cast<int>(rows_.size()); }

  // Adds a_i^T x >= rhs; returns the row id.
  int AddRow(SparseRow row, double rhs);
  void SetBounds(int j, double lo, double hi);
  double lower(int j) const { return lo_[static_cast<size_t>(j)]; }
  double upper(int j) const { return hi_[static_cast<size_t>(j)]; }

  Status Solve(std::int64_t max_iterations = 1'000'000);

  const std::vector<double>& primal() const { return x_; }
  double objective() const;
  double lower_bound() const;

  // d_j >= 0 is the rate at which the optimum rises when x_j leaves the
  // bound it sits at; `at_upper` tells which bound. Zero for variables not
  // held by a bound.
  struct ReducedCost {
    double value = 0.0;
    bool at_upper = false;
    bool at_bound = false;
  };
  ReducedCost reduced_cost(int j) const;

  std::int64_t iterations() const { return iterations_; }

 private:
  struct Row {
    SparseRow a;
    double rhs = 0.0;
    double norm = 1.0;
  };

  // Constraint ids: [0, n) lower bounds, [n, 2n) upper bounds, then rows.
  double Activity(int id) const;
  double Rhs(int id) const;
  double Norm(int id) const;
  void Alpha(int id, std::vector<double>& alpha) const;
  void Refactor();
  void RecomputePrimal();
  void RecomputeDual();

  int n_;
  std::vector<double> cost_;       // perturbed
  std::vector<double> true_cost_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<Row> rows_;
  std::vector<int> basis_;         // position -> constraint id
  std::vector<int> position_;      // constraint id -> position or -1
  std::vector<double> binv_;       // row-major n x n inverse of the basis rows
  std::vector<double> lambda_;     // duals by position
  std::vector<double> x_;
  std::int64_t iterations_ = 0;
  int since_refactor_ = 0;
};

}  // namespace mlspanner::ilp

#endif  // MLSPANNER_ILP_DUAL_SIMPLEX_H_
