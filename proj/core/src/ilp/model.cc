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

#include "mlspanner/ilp/model.h"

#include <cmath>

#include "mlspanner/errors.h"

namespace mlspanner::ilp {

std::vector<Arc> DirectedArcs(const Graph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(g.edge_count()) * 2);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    arcs.push_back({edge.u, edge.v, e});
    arcs.push_back({edge.v, edge.u, e});
  }
  return arcs;
}

int IlpModel::AddVariable(Variable v) {
  if (v.lower > v.upper) throw ArgumentError("variable " + v.name + " has inverted bounds");
  if (by_name_.count(v.name)) throw ArgumentError("duplicate variable name " + v.name);
  const int index = variable_count();
  by_name_.emplace(v.name, index);
  variables_.push_back(std::move(v));
  return index;
}

void IlpModel::AddConstraint(Constraint c) {
  for (const Term& t : c.terms) {
    if (t.var < 0 || t.var >= variable_count()) {
      throw ArgumentError("constraint " + c.name + " references an undeclared variable");
    }
  }
  constraints_.push_back(std::move(c));
}

void IlpModel::SetObjective(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= variable_count()) {
      throw ArgumentError("objective references an undeclared variable");
    }
  }
  objective_ = std::move(terms);
}

std::optional<int> IlpModel::FindVariable(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void IlpModel::Fix(int var, double value) {
  Variable& v = variable(var);
  if (value < v.lower - 1e-9 || value > v.upper + 1e-9) {
    throw ArgumentError("cannot fix " + v.name + " outside its bounds");
  }
  v.lower = value;
  v.upper = value;
}

double IlpModel::Evaluate(const std::vector<double>& values) const {
  double total = 0.0;
  for (const Term& t : objective_) total += t.coef * values[static_cast<size_t>(t.var)];
  return total;
}

bool IlpModel::IsFeasible(const std::vector<double>& values) const {
  if (values.size() != variables_.size()) return false;
  for (size_t i = 0; i < variables_.size(); ++i) {
    const Variable& v = variables_[i];
    if (values[i] < v.lower - 1e-9 || values[i] > v.upper + 1e-9) return false;
    if (v.kind != VariableKind::kContinuous && std::abs(values[i] - std::round(values[i])) > 1e-9) {
      return false;
    }
  }
  for (const Constraint& c : constraints_) {
    double lhs = 0.0;
    for (const Term& t : c.terms) lhs += t.coef * values[static_cast<size_t>(t.var)];
    const double tol = 1e-9 * std::max(1.0, std::abs(c.rhs));
    switch (c.sense) {
      case Sense::kLessEqual:
        if (lhs > c.rhs + tol) return false;
        break;
      case Sense::kGreaterEqual:
        if (lhs < c.rhs - tol) return false;
        break;
      case Sense::kEqual:
        if (std::abs(lhs - c.rhs) > tol) return false;
        break;
    }
  }
  return true;
}

std::string EdgeVariableName(const Edge& e) {
  return "x_e_" + std::to_string(e.u) + "_" + std::to_string(e.v);
}

std::string GradeVariableName(const Edge& e) {
  return "y_" + std::to_string(e.u) + "_" + std::to_string(e.v);
}

std::string ArcVariableName(const Arc& a, const VertexPair& pair) {
  return "xa_" + std::to_string(a.from) + "_" + std::to_string(a.to) + "_" +
         std::to_string(pair.first) + "_" + std::to_string(pair.second);
}

}  // namespace mlspanner::ilp
