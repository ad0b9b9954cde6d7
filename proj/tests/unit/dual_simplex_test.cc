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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "mlspanner/ilp/dual_simplex.h"

namespace mlspanner::ilp {
namespace {

TEST(DualSimplexTest, TwoConstraints) {
  DualSimplex lp({1, 1}, {0, 0}, {5, 5});
  lp.AddRow({{0, 1}, {1, 2}}, 2);
  lp.AddRow({{0, 1}, {3, 1}}, 3);
  ASSERT_EQ(lp.Solve(), DualSimplex::Status::kOptimal);
  EXPECT_NEAR(lp.objective(), 1.4, 1e-9);
  EXPECT_NEAR(lp.primal()[0], 0.8, 1e-7);
  EXPECT_NEAR(lp.primal()[1], 0.6, 1e-7);
  EXPECT_LE(lp.lower_bound(), lp.objective() + 1e-12);
  EXPECT_GT(lp.lower_bound(), lp.objective() - 1e-6);
}

TEST(DualSimplexTest, WarmStartAndBounds) {
  DualSimplex lp({2, 3, 4}, {0, 0, 0}, {1, 1, 1});
  ASSERT_EQ(lp.Solve(), DualSimplex::Status::kOptimal);
  EXPECT_NEAR(lp.objective(), 0, 1e-9);
  lp.AddRow({{0, 1, 2}, {1, 1, 1}}, 1);
  ASSERT_EQ(lp.Solve(), DualSimplex::Status::kOptimal);
  EXPECT_NEAR(lp.objective(), 2, 1e-9);
  // x_0 sits at its lower bound with reduced cost 0 only if it is basic;
  // x_2 is nonbasic at 0 and would cost 4 - 2 per unit.
  const auto rc = lp.reduced_cost(2);
  EXPECT_TRUE(rc.at_bound);
  EXPECT_FALSE(rc.at_upper);
  EXPECT_NEAR(rc.value, 2, 1e-6);
  lp.SetBounds(0, 0, 0);
  ASSERT_EQ(lp.Solve(), DualSimplex::Status::kOptimal);
  EXPECT_NEAR(lp.objective(), 3, 1e-9);
  lp.SetBounds(1, 0, 0);
  lp.SetBounds(2, 0, 0);
  EXPECT_EQ(lp.Solve(), DualSimplex::Status::kInfeasible);
}

// Minimum over all vertices of {a x >= b, lo <= x <= hi} for tiny n.
double VertexOracle(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                    const std::vector<double>& c, double hi) {
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (int j = 0; j < n; ++j) {
    std::vector<double> lo(static_cast<size_t>(n)), up(static_cast<size_t>(n));
    lo[static_cast<size_t>(j)] = 1;
    up[static_cast<size_t>(j)] = -1;
    rows.push_back(lo), rhs.push_back(0);
    rows.push_back(up), rhs.push_back(-hi);
  }
  for (size_t i = 0; i < a.size(); ++i) rows.push_back(a[i]), rhs.push_back(b[i]);
  const int m = static_cast<int>(rows.size());
  double best = INFINITY;
  std::vector<int> pick(static_cast<size_t>(n));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      std::vector<std::vector<double>> mat(static_cast<size_t>(n));
      for (int r = 0; r < n; ++r) {
        mat[static_cast<size_t>(r)] = rows[static_cast<size_t>(pick[static_cast<size_t>(r)])];
        mat[static_cast<size_t>(r)].push_back(rhs[static_cast<size_t>(pick[static_cast<size_t>(r)])]);
      }
      for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
          if (std::abs(mat[static_cast<size_t>(r)][static_cast<size_t>(col)]) > 1e-9) piv = r;
        if (piv < 0) return;
        std::swap(mat[static_cast<size_t>(col)], mat[static_cast<size_t>(piv)]);
        for (int r = 0; r < n; ++r) {
          if (r == col) continue;
          const double f = mat[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                           mat[static_cast<size_t>(col)][static_cast<size_t>(col)];
          for (int k = 0; k <= n; ++k)
            mat[static_cast<size_t>(r)][static_cast<size_t>(k)] -= f * mat[static_cast<size_t>(col)][static_cast<size_t>(k)];
        }
      }
      std::vector<double> x(static_cast<size_t>(n));
      for (int r = 0; r < n; ++r)
        x[static_cast<size_t>(r)] = mat[static_cast<size_t>(r)][static_cast<size_t>(n)] / mat[static_cast<size_t>(r)][static_cast<size_t>(r)];
      for (int r = 0; r < m; ++r) {
        double lhs = 0;
        for (int j = 0; j < n; ++j) lhs += rows[static_cast<size_t>(r)][static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
        if (lhs < rhs[static_cast<size_t>(r)] - 1e-9) return;
      }
      double obj = 0;
      for (int j = 0; j < n; ++j) obj += c[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
      best = std::min(best, obj);
      return;
    }
    for (int r = start; r < m; ++r) {
      pick[static_cast<size_t>(depth)] = r;
      rec(r + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

TEST(DualSimplexTest, MatchesVertexEnumeration) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(0, 4), cost(1, 9), rows(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3;
    std::vector<double> c(n);
    for (double& x : c) x = cost(rng);
    DualSimplex lp(c, std::vector<double>(n, 0), std::vector<double>(n, 2));
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    const int m = rows(rng);
    for (int i = 0; i < m; ++i) {
      std::vector<double> row(n);
      SparseRow sparse;
      for (int j = 0; j < n; ++j) {
        row[static_cast<size_t>(j)] = coef(rng);
        if (row[static_cast<size_t>(j)] != 0) {
          sparse.index.push_back(j);
          sparse.value.push_back(row[static_cast<size_t>(j)]);
        }
      }
      const double rhs = coef(rng) + 1;
      a.push_back(row);
      b.push_back(rhs);
      lp.AddRow(sparse, rhs);
    }
    const double expected = VertexOracle(a, b, c, 2);
    const auto status = lp.Solve();
    if (std::isinf(expected)) {
      EXPECT_EQ(status, DualSimplex::Status::kInfeasible) << trial;
    } else {
      ASSERT_EQ(status, DualSimplex::Status::kOptimal) << trial;
      EXPECT_NEAR(lp.objective(), expected, 1e-7) << trial;
      EXPECT_LE(lp.lower_bound(), expected + 1e-9) << trial;
    }
  }
}

}  // namespace
}  // namespace mlspanner::ilp
