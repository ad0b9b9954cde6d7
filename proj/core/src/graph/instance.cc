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

#include "mlspanner/graph/instance.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "mlspanner/errors.h"
#include "mlspanner/format.h"

namespace mlspanner {

int MlgsInstance::RequiredGrade(Vertex v) const {
  int grade = 0;
  for (int i = 1; i <= level_count(); ++i) {
    auto ts = level(i);
    if (std::binary_search(ts.begin(), ts.end(), v)) grade = i;
  }
  return grade;
}

std::vector<int> MlgsInstance::RequiredGrades() const {
  std::vector<int> grades(static_cast<size_t>(graph.vertex_count()), 0);
  for (int i = 1; i <= level_count(); ++i) {
    for (Vertex v : level(i)) grades[static_cast<size_t>(v)] = std::max(grades[static_cast<size_t>(v)], i);
  }
  return grades;
}

void ValidateInstance(const MlgsInstance& inst) {
  if (inst.level_count() < 1) throw ArgumentError("instance needs at least one terminal level");
  if (!(inst.stretch >= 1.0)) throw ArgumentError("stretch factor must be >= 1");
  for (int i = 1; i <= inst.level_count(); ++i) {
    auto ts = inst.level(i);
    if (!std::is_sorted(ts.begin(), ts.end()) ||
        std::adjacent_find(ts.begin(), ts.end()) != ts.end()) {
      throw ArgumentError("terminal set of level " + std::to_string(i) + " must be sorted and distinct");
    }
    for (Vertex v : ts) {
      if (!inst.graph.HasVertex(v)) {
        throw ArgumentError("terminal " + std::to_string(v) + " is not a vertex");
      }
    }
    if (i > 1) {
      auto lower = inst.level(i - 1);
      if (!std::includes(lower.begin(), lower.end(), ts.begin(), ts.end())) {
        throw ArgumentError("terminal sets not nested");
      }
    }
  }
  if (inst.level(inst.level_count()).size() < 2) {
    throw ArgumentError("top level needs at least two terminals");
  }
}

MlgsInstance ParseInstance(std::string_view text) {
  std::optional<Graph> graph;
  std::optional<double> stretch;
  std::map<int, std::pair<int, std::vector<Vertex>>> levels;  // level -> (line, terminals)

  int line_no = 0;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_no;
    auto tokens = Tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view key = tokens[0];
    auto vertex = [&](std::string_view tok) -> Vertex {
      auto value = ParseInteger(tok);
      if (!value) throw ParseError(line_no, "expected a vertex id, got '" + std::string(tok) + "'");
      if (*value < 0 || *value >= graph->vertex_count()) {
        throw ParseError(line_no, "vertex " + std::string(tok) + " out of range");
      }
      return static_cast<Vertex>(*value);
    };

    if (key == "nodes") {
      if (graph) throw ParseError(line_no, "'nodes' given twice");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'nodes <n>'");
      auto n = ParseInteger(tokens[1]);
      if (!n || *n < 1 || *n > 100'000'000) throw ParseError(line_no, "invalid vertex count");
      graph.emplace(static_cast<int>(*n));
      continue;
    }
    if (!graph) throw ParseError(line_no, "'nodes <n>' must come first");

    if (key == "edge") {
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'edge <u> <v> <w>'");
      const Vertex u = vertex(tokens[1]);
      const Vertex v = vertex(tokens[2]);
      auto w = ParseNumber(tokens[3]);
      if (!w) throw ParseError(line_no, "invalid weight '" + std::string(tokens[3]) + "'");
      try {
        graph->AddEdge(u, v, *w);
      } catch (const ArgumentError& err) {
        throw ParseError(line_no, err.what());
      }
    } else if (key == "stretch") {
      if (stretch) throw ParseError(line_no, "'stretch' given twice");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'stretch <t>'");
      auto t = ParseNumber(tokens[1]);
      if (!t) throw ParseError(line_no, "invalid stretch '" + std::string(tokens[1]) + "'");
      if (!(*t >= 1.0)) throw ParseError(line_no, "stretch must be >= 1");
      stretch = *t;
    } else if (key == "level") {
      if (tokens.size() < 2) throw ParseError(line_no, "expected 'level <i> <v...>'");
      auto index = ParseInteger(tokens[1]);
      if (!index || *index < 1 || *index > 1'000'000) throw ParseError(line_no, "invalid level index");
      if (levels.count(static_cast<int>(*index))) {
        throw ParseError(line_no, "level " + std::string(tokens[1]) + " given twice");
      }
      std::vector<Vertex> ts;
      for (size_t k = 2; k < tokens.size(); ++k) ts.push_back(vertex(tokens[k]));
      std::sort(ts.begin(), ts.end());
      if (std::adjacent_find(ts.begin(), ts.end()) != ts.end()) {
        throw ParseError(line_no, "duplicate terminal in level " + std::string(tokens[1]));
      }
      levels.emplace(static_cast<int>(*index), std::make_pair(line_no, std::move(ts)));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }

  if (!graph) throw ParseError(0, "missing 'nodes <n>'");
  if (!stretch) throw ParseError(0, "missing 'stretch <t>'");
  if (levels.empty()) throw ParseError(0, "missing 'level' lines");

  MlgsInstance inst;
  inst.graph = std::move(*graph);
  inst.stretch = *stretch;
  int expected = 1;
  for (auto& [index, entry] : levels) {
    if (index != expected) {
      throw ParseError(entry.first, "levels must be numbered 1..l without gaps");
    }
    if (index > 1) {
      const auto& lower = inst.terminals.back();
      const auto& upper = entry.second;
      if (!std::includes(lower.begin(), lower.end(), upper.begin(), upper.end())) {
        throw ParseError(entry.first, "terminal sets not nested");
      }
    }
    inst.terminals.push_back(std::move(entry.second));
    ++expected;
  }
  if (inst.terminals.back().size() < 2) {
    throw ParseError(levels.rbegin()->second.first, "top level needs at least two terminals");
  }
  return inst;
}

std::string SerializeInstance(const MlgsInstance& inst, std::span<const std::string> header) {
  std::ostringstream out;
  for (const auto& line : header) out << "# " << line << '\n';
  out << "nodes " << inst.graph.vertex_count() << '\n';
  for (const Edge& e : inst.graph.edges()) {
    out << "edge " << e.u << ' ' << e.v << ' ' << FormatNumber(e.weight) << '\n';
  }
  out << "stretch " << FormatNumber(inst.stretch) << '\n';
  for (int i = 1; i <= inst.level_count(); ++i) {
    out << "level " << i;
    for (Vertex v : inst.level(i)) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

MlgsInstance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void WriteInstanceFile(const std::string& path, const MlgsInstance& inst,
                       std::span<const std::string> header) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write instance file '" + path + "'");
  out << SerializeInstance(inst, header);
}

std::string SerializeEdgeList(const Graph& g, const EdgeSet& edges) {
  std::ostringstream out;
  for (EdgeId e : edges.ids()) {
    const Edge& edge = g.edge(e);
    out << "edge " << edge.u << ' ' << edge.v << ' ' << FormatNumber(edge.weight) << '\n';
  }
  return out.str();
}

}  // namespace mlspanner
