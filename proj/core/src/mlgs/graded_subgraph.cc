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

#include "mlspanner/mlgs/graded_subgraph.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mlspanner/errors.h"
#include "mlspanner/format.h"
#include "mlspanner/graph/stretch.h"

namespace mlspanner {

void GradedSubgraph::Raise(const EdgeSet& edges, int y) {
  if (edges.universe() != edge_count()) throw ArgumentError("edge set does not match the solution");
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (edges.contains(e)) grades_[static_cast<size_t>(e)] = std::max(grades_[static_cast<size_t>(e)], y);
  }
}

int GradedSubgraph::MaxGrade() const {
  return grades_.empty() ? 0 : *std::max_element(grades_.begin(), grades_.end());
}

EdgeSet GradedSubgraph::LevelEdges(int i) const {
  EdgeSet set(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) {
    if (grades_[static_cast<size_t>(e)] >= i) set.insert(e);
  }
  return set;
}

std::vector<EdgeSet> GradedSubgraph::ToLevels(int levels) const {
  std::vector<EdgeSet> out;
  for (int i = 1; i <= levels; ++i) out.push_back(LevelEdges(i));
  return out;
}

GradedSubgraph GradedSubgraph::FromLevels(std::span<const EdgeSet> levels) {
  if (levels.empty()) return GradedSubgraph();
  GradedSubgraph sol(std::vector<int>(static_cast<size_t>(levels.front().universe()), 0));
  for (size_t i = 0; i < levels.size(); ++i) sol.Raise(levels[i], static_cast<int>(i) + 1);
  return sol;
}

namespace {

void CheckShape(const MlgsInstance& inst, const GradedSubgraph& sol) {
  if (sol.edge_count() != inst.graph.edge_count()) {
    throw ArgumentError("solution grades " + std::to_string(sol.edge_count()) +
                        " edges but the instance has " + std::to_string(inst.graph.edge_count()));
  }
  for (int y : sol.grades()) {
    if (y < 0 || y > inst.level_count()) {
      throw ArgumentError("grade " + std::to_string(y) + " outside 0.." +
                          std::to_string(inst.level_count()));
    }
  }
}

}  // namespace

double SolutionCost(const MlgsInstance& inst, const GradedSubgraph& sol) {
  CheckShape(inst, sol);
  double cost = 0.0;
  for (EdgeId e = 0; e < sol.edge_count(); ++e) cost += inst.graph.edge(e).weight * sol.grade(e);
  return cost;
}

std::vector<double> CostByExactGrade(const MlgsInstance& inst, const GradedSubgraph& sol) {
  CheckShape(inst, sol);
  std::vector<double> out(static_cast<size_t>(inst.level_count()) + 1, 0.0);
  for (EdgeId e = 0; e < sol.edge_count(); ++e) {
    out[static_cast<size_t>(sol.grade(e))] += inst.graph.edge(e).weight;
  }
  out[0] = 0.0;
  return out;
}

std::vector<LevelViolation> ValidateMlgs(const MlgsInstance& inst, const GradedSubgraph& sol) {
  std::vector<LevelViolation> out;
  try {
    CheckShape(inst, sol);
  } catch (const ArgumentError&) {
    out.push_back({0, 0, 0, kInfinity, 0.0});
    return out;
  }
  for (int i = 1; i <= inst.level_count(); ++i) {
    const PairSet pairs = PairSet::AllPairs(inst.level(i));
    for (const StretchViolation& v :
         StretchViolations(inst.graph, sol.LevelEdges(i), pairs, inst.stretch)) {
      out.push_back({i, v.u, v.v, v.subgraph_distance, v.bound});
    }
  }
  return out;
}

std::string SerializeGradedSubgraph(const Graph& g, const GradedSubgraph& sol) {
  if (sol.edge_count() != g.edge_count()) throw ArgumentError("solution does not match the graph");
  std::ostringstream out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (sol.grade(e) == 0) continue;
    out << "grade " << g.edge(e).u << ' ' << g.edge(e).v << ' ' << sol.grade(e) << '\n';
  }
  return out.str();
}

GradedSubgraph ParseGradedSubgraph(std::string_view text, const Graph& g) {
  GradedSubgraph sol(g);
  std::vector<bool> seen(static_cast<size_t>(g.edge_count()), false);
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    auto tokens = Tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] != "grade" || tokens.size() != 4) {
      throw ParseError(line_no, "expected 'grade <u> <v> <y>'");
    }
    auto u = ParseInteger(tokens[1]);
    auto v = ParseInteger(tokens[2]);
    auto y = ParseInteger(tokens[3]);
    if (!u || !v || !y) throw ParseError(line_no, "grade line needs three integers");
    if (*y < 0 || *y > 1'000'000) throw ParseError(line_no, "grade out of range");
    auto e = g.FindEdge(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
    if (!e) throw ParseError(line_no, "{" + std::string(tokens[1]) + "," + std::string(tokens[2]) + "} is not an edge");
    if (seen[static_cast<size_t>(*e)]) throw ParseError(line_no, "edge graded twice");
    seen[static_cast<size_t>(*e)] = true;
    sol.set_grade(*e, static_cast<int>(*y));
  }
  return sol;
}

GradedSubgraph ReadGradedSubgraphFile(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open solution file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGradedSubgraph(buffer.str(), g);
}

void WriteGradedSubgraphFile(const std::string& path, const Graph& g, const GradedSubgraph& sol) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write solution file '" + path + "'");
  out << SerializeGradedSubgraph(g, sol);
}

}  // namespace mlspanner
