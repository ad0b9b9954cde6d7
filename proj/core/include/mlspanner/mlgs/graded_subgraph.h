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

#ifndef MLSPANNER_MLGS_GRADED_SUBGRAPH_H_
#define MLSPANNER_MLGS_GRADED_SUBGRAPH_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlspanner/graph/graph.h"
#include "mlspanner/graph/instance.h"

namespace mlspanner {

// Grade-of-service form of a multi-level solution: every edge carries a grade
// y_e in {0..l}, 0 meaning absent. The level-i graph is {e : y_e >= i}, so the
// nesting G_l ⊆ ... ⊆ G_1 holds by construction.
class GradedSubgraph {
 public:
  GradedSubgraph() = default;
  explicit GradedSubgraph(const Graph& g) : grades_(static_cast<size_t>(g.edge_count()), 0) {}
  explicit GradedSubgraph(std::vector<int> grades) : grades_(std::move(grades)) {}

  int edge_count() const { return static_cast<int>(grades_.size()); }
  int grade(EdgeId e) const { return grades_[static_cast<size_t>(e)]; }
  void set_grade(EdgeId e, int y) { grades_[static_cast<size_t>(e)] = y; }
  // Raises the grade of every edge in `edges` to at least y.
  void Raise(const EdgeSet& edges, int y);

  std::span<const int> grades() const { return grades_; }
  int MaxGrade() const;

  // E_i = {e : y_e >= i}.
  EdgeSet LevelEdges(int i) const;

  // Nested sequence (E_1, ..., E_l) and back. FromLevels takes the maximum
  // level each edge appears in, so it also accepts non-nested input.
  std::vector<EdgeSet> ToLevels(int levels) const;
  static GradedSubgraph FromLevels(std::span<const EdgeSet> levels);

  friend bool operator==(const GradedSubgraph&, const GradedSubgraph&) = default;

 private:
  std::vector<int> grades_;
};

// Sum of c_e * y_e. Throws ArgumentError when the solution does not belong to
// the instance graph or a grade lies outside 0..l.
double SolutionCost(const MlgsInstance& inst, const GradedSubgraph& sol);

// Cost of edges whose grade is exactly i (TOP_i / OPT_i in the level-wise
// analysis), for i = 1..l. Index 0 of the result is unused.
std::vector<double> CostByExactGrade(const MlgsInstance& inst, const GradedSubgraph& sol);

struct LevelViolation {
  int level = 0;
  Vertex u = 0;
  Vertex v = 0;
  double subgraph_distance = 0.0;
  double bound = 0.0;
};

// Empty iff for every level i and every u, v in T_i the grade->=i subgraph has
// d(u, v) <= t * d_G(u, v). Malformed solutions (wrong size, grade out of
// range) are reported as violations at level 0 rather than thrown.
std::vector<LevelViolation> ValidateMlgs(const MlgsInstance& inst, const GradedSubgraph& sol);

// Text form: lines `grade <u> <v> <y>`; omitted edges have grade 0.
std::string SerializeGradedSubgraph(const Graph& g, const GradedSubgraph& sol);
// Throws ParseError on malformed lines, non-edges or repeated edges.
GradedSubgraph ParseGradedSubgraph(std::string_view text, const Graph& g);

GradedSubgraph ReadGradedSubgraphFile(const std::string& path, const Graph& g);
void WriteGradedSubgraphFile(const std::string& path, const Graph& g, const GradedSubgraph& sol);

}  // namespace mlspanner

#endif  // MLSPANNER_MLGS_GRADED_SUBGRAPH_H_
