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

#ifndef MLSPANNER_GRAPH_INSTANCE_H_
#define MLSPANNER_GRAPH_INSTANCE_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlspanner/graph/graph.h"

namespace mlspanner {

// A multi-level spanner instance: a graph, terminal sets
// T_1 ⊇ T_2 ⊇ ... ⊇ T_l and a single stretch factor t shared by all levels.
struct MlgsInstance {
  Graph graph;
  // terminals[i] is T_{i+1}, sorted ascending.
  std::vector<std::vector<Vertex>> terminals;
  double stretch = 1.0;

  int level_count() const { return static_cast<int>(terminals.size()); }
  std::span<const Vertex> level(int i) const {
    return terminals[static_cast<size_t>(i - 1)];
  }

  // Highest level containing v, 0 for non-terminals.
  int RequiredGrade(Vertex v) const;
  std::vector<int> RequiredGrades() const;

  friend bool operator==(const MlgsInstance&, const MlgsInstance&) = default;
};

// Throws ArgumentError unless: l >= 1, t >= 1, terminal ids are vertices,
// sets are nested, and |T_l| >= 2.
void ValidateInstance(const MlgsInstance& inst);

// Line-oriented text format, '#' starts a comment:
//   nodes <n>                 once, before anything else
//   edge <u> <v> <w>          repeated
//   stretch <t>               once
//   level <i> <v...>          one line per level i = 1..l, nested descending
// Throws ParseError carrying the offending line number.
MlgsInstance ParseInstance(std::string_view text);

// Inverse of ParseInstance. `header` lines are emitted first as comments.
std::string SerializeInstance(const MlgsInstance& inst,
                              std::span<const std::string> header = {});

MlgsInstance ReadInstanceFile(const std::string& path);
void WriteInstanceFile(const std::string& path, const MlgsInstance& inst,
                       std::span<const std::string> header = {});

// Only `edge` lines; used for plain subgraphs.
std::string SerializeEdgeList(const Graph& g, const EdgeSet& edges);

}  // namespace mlspanner

#endif  // MLSPANNER_GRAPH_INSTANCE_H_
