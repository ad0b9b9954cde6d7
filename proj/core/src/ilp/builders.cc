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

#include "mlspanner/ilp/builders.h"

#include <algorithm>
#include <string>

#include "mlspanner/errors.h"
#include "mlspanner/graph/shortest_paths.h"

namespace mlspanner::ilp {
namespace {

std::string PairTag(const VertexPair& p) {
  return std::to_string(p.first) + "_" + std::to_string(p.second);
}

// Adds the arc variables and the length/flow/out-degree rows for one pair.
// Returns the arc variable indices.
std::vector<int> AddPairFlow(IlpModel& model, const Graph& g, const std::vector<Arc>& arcs,
                             const VertexPair& pair, int block, double budget) {
  std::vector<int> vars;
  vars.reserve(arcs.size());
  for (const Arc& a : arcs) {
    Variable v;
    v.name = ArcVariableName(a, pair);
    v.block = block;
    v.relaxable = true;
    vars.push_back(model.AddVariable(std::move(v)));
  }
  const std::string tag = PairTag(pair);

  Constraint len{"len_" + tag, {}, Sense::kLessEqual, budget};
  for (size_t a = 0; a < arcs.size(); ++a) {
    len.terms.push_back({vars[a], g.edge(arcs[a].edge).weight});
  }
  if (!len.terms.empty()) model.AddConstraint(std::move(len));

  for (Vertex i = 0; i < g.vertex_count(); ++i) {
    Constraint flow{"flow_" + tag + "_" + std::to_string(i), {}, Sense::kEqual, 0.0};
    Constraint out{"out_" + tag + "_" + std::to_string(i), {}, Sense::kLessEqual, 1.0};
    for (const Incidence& inc : g.neighbors(i)) {
      // Arc 2e leaves the smaller endpoint.
      const bool i_is_u = g.edge(inc.edge).u == i;
      const int leaving = vars[static_cast<size_t>(2 * inc.edge + (i_is_u ? 0 : 1))];
      const int entering = vars[static_cast<size_t>(2 * inc.edge + (i_is_u ? 1 : 0))];
      flow.terms.push_back({leaving, 1.0});
      flow.terms.push_back({entering, -1.0});
      out.terms.push_back({leaving, 1.0});
    }
    if (i == pair.first) flow.rhs = 1.0;
    if (i == pair.second) flow.rhs = -1.0;
    if (flow.terms.empty()) continue;  // isolated vertex: 0 = 0 (endpoints are connected)
    model.AddConstraint(std::move(flow));
    model.AddConstraint(std::move(out));
  }
  return vars;
}

double Budget(const DistanceMatrix& dist, const VertexPair& p, double t) {
  const double d = dist(p.first, p.second);
  if (d == kInfinity) throw DisconnectedError(p.first, p.second);
  return t * d;
}

ModelLayout BaseLayout(const Graph& g, ModelKind kind) {
  ModelLayout layout;
  layout.kind = kind;
  layout.edges.assign(g.edges().begin(), g.edges().end());
  return layout;
}

}  // namespace

IlpModel BuildPairwiseModel(const Graph& g, const PairSet& pairs, double t) {
  if (!(t >= 1.0)) throw ArgumentError("stretch must be at least 1");
  for (const VertexPair& p : pairs) {
    if (!g.HasVertex(p.first) || !g.HasVertex(p.second)) throw ArgumentError("pair vertex out of range");
  }
  const DistanceMatrix dist = AllPairsDistances(g);
  for (const VertexPair& p : pairs) Budget(dist, p, t);

  IlpModel model;
  ModelLayout layout = BaseLayout(g, ModelKind::kPairwise);
  std::vector<Term> objective;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Variable x;
    x.name = EdgeVariableName(g.edge(e));
    layout.edge_var.push_back(model.AddVariable(std::move(x)));
    objective.push_back({layout.edge_var.back(), g.edge(e).weight});
  }
  const std::vector<Arc> arcs = DirectedArcs(g);
  int block = 0;
  for (const VertexPair& p : pairs) {
    std::vector<int> vars = AddPairFlow(model, g, arcs, p, block++, Budget(dist, p, t));
    const std::string tag = PairTag(p);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      model.AddConstraint({"link_" + tag + "_" + std::to_string(edge.u) + "_" + std::to_string(edge.v),
                           {{vars[static_cast<size_t>(2 * e)], 1.0},
                            {vars[static_cast<size_t>(2 * e + 1)], 1.0},
                            {layout.edge_var[static_cast<size_t>(e)], -1.0}},
                           Sense::kLessEqual,
                           0.0});
    }
    layout.pairs.push_back(p);
    layout.pair_grade.push_back(1);
    layout.arc_var.push_back(std::move(vars));
  }
  model.SetObjective(std::move(objective));
  model.layout() = std::move(layout);
  return model;
}

IlpModel BuildMlgsModel(const MlgsInstance& inst) {
  ValidateInstance(inst);
  const Graph& g = inst.graph;
  const int levels = inst.level_count();
  const PairSet pairs = PairSet::AllPairs(inst.level(1));
  const DistanceMatrix dist = AllPairsDistances(g);
  for (const VertexPair& p : pairs) Budget(dist, p, inst.stretch);
  const std::vector<int> required = inst.RequiredGrades();

  IlpModel model;
  ModelLayout layout = BaseLayout(g, ModelKind::kMultiLevel);
  layout.levels = levels;
  std::vector<Term> objective;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Variable y;
    y.name = GradeVariableName(g.edge(e));
    y.kind = VariableKind::kInteger;
    y.upper = levels;
    layout.edge_var.push_back(model.AddVariable(std::move(y)));
    objective.push_back({layout.edge_var.back(), g.edge(e).weight});
  }
  const std::vector<Arc> arcs = DirectedArcs(g);
  int block = 0;
  for (const VertexPair& p : pairs) {
    const int m = std::min(required[static_cast<size_t>(p.first)], required[static_cast<size_t>(p.second)]);
    std::vector<int> vars = AddPairFlow(model, g, arcs, p, block++, Budget(dist, p, inst.stretch));
    const std::string tag = PairTag(p);
    for (size_t a = 0; a < arcs.size(); ++a) {
      model.AddConstraint({"grade_" + tag + "_" + std::to_string(arcs[a].from) + "_" +
                               std::to_string(arcs[a].to),
                           {{layout.edge_var[static_cast<size_t>(arcs[a].edge)], 1.0},
                            {vars[a], -static_cast<double>(m)}},
                           Sense::kGreaterEqual,
                           0.0});
    }
    layout.pairs.push_back(p);
    layout.pair_grade.push_back(m);
    layout.arc_var.push_back(std::move(vars));
  }
  model.SetObjective(std::move(objective));
  model.layout() = std::move(layout);
  return model;
}

}  // namespace mlspanner::ilp
