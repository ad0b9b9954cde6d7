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

#ifndef MLSPANNER_ILP_MODEL_H_
#define MLSPANNER_ILP_MODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mlspanner/graph/graph.h"

namespace mlspanner::ilp {

enum class VariableKind { kBinary, kInteger, kContinuous };
enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Variable {
  std::string name;
  VariableKind kind = VariableKind::kBinary;
  double lower = 0.0;
  double upper = 1.0;
  // Variables sharing a block id only interact with each other and with
  // linking variables (block -1). The flow formulations put every pair's
  // arc variables in their own block; edge variables are linking.
  int block = -1;
  // May be declared continuous in [0, 1] without changing the optimum.
  bool relaxable = false;
};

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

// Directed copies of the undirected edges: arc 2e runs u -> v and arc 2e+1
// runs v -> u for edge e = {u, v} with u < v. Both carry c_e.
struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  EdgeId edge = 0;
};
std::vector<Arc> DirectedArcs(const Graph& g);

enum class ModelKind { kPairwise, kMultiLevel };

// Index maps that tie model variables back to the graph.
struct ModelLayout {
  ModelKind kind = ModelKind::kPairwise;
  int levels = 1;
  std::vector<Edge> edges;               // endpoints and weights, by edge id
  std::vector<VertexPair> pairs;          // K (or the level-1 terminal pairs)
  std::vector<int> pair_grade;            // m_uv per pair; all 1 for pairwise
  std::vector<int> edge_var;              // x_e or y_e by edge id
  std::vector<std::vector<int>> arc_var;  // [pair][arc]
};

class IlpModel {
 public:
  // Throws ArgumentError on a duplicate name or inverted bounds.
  int AddVariable(Variable v);
  // Throws ArgumentError when a term references an undeclared variable.
  void AddConstraint(Constraint c);
  void SetObjective(std::vector<Term> terms);

  const std::vector<Variable>& variables() const { return variables_; }
  Variable& variable(int i) { return variables_[static_cast<size_t>(i)]; }
  const Variable& variable(int i) const { return variables_[static_cast<size_t>(i)]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Term>& objective() const { return objective_; }

  int variable_count() const { return static_cast<int>(variables_.size()); }
  int constraint_count() const { return static_cast<int>(constraints_.size()); }
  std::optional<int> FindVariable(std::string_view name) const;

  // Sets lower = upper = value; throws ArgumentError if outside the bounds.
  void Fix(int var, double value);

  ModelLayout& layout() { return layout_; }
  const ModelLayout& layout() const { return layout_; }

  // Objective value and feasibility (within 1e-9) of a full assignment.
  double Evaluate(const std::vector<double>& values) const;
  bool IsFeasible(const std::vector<double>& values) const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<Term> objective_;
  std::unordered_map<std::string, int> by_name_;
  ModelLayout layout_;
};

// Public variable names.
std::string EdgeVariableName(const Edge& e);                       // x_e_<u>_<v>
std::string GradeVariableName(const Edge& e);                      // y_<u>_<v>
std::string ArcVariableName(const Arc& a, const VertexPair& pair);  // xa_<i>_<j>_<s>_<t>

}  // namespace mlspanner::ilp

#endif  // MLSPANNER_ILP_MODEL_H_
