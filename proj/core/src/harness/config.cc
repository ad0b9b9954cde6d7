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

#include "mlspanner/harness/config.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "mlspanner/errors.h"
#include "mlspanner/format.h"

namespace mlspanner {

std::string_view ToString(Algorithm a) {
  switch (a) {
    case Algorithm::kBottomUp: return "BU";
    case Algorithm::kTopDown: return "TD";
    case Algorithm::kMin: return "MIN";
    case Algorithm::kExact: return "EXACT";
  }
  return "EXACT";
}

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SplitList(std::string_view value, int line) {
  value = Trim(value);
  if (!value.empty() && value.front() == '[') {
    if (value.back() != ']') throw ParseError(line, "unterminated '['");
    value = value.substr(1, value.size() - 2);
  }
  std::vector<std::string> out;
  size_t start = 0;
  while (start <= value.size()) {
    const size_t comma = value.find(',', start);
    const auto item = Trim(value.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!item.empty()) {
      std::string s(item);
      if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
      out.push_back(std::move(s));
    } else if (comma != std::string_view::npos) {
      throw ParseError(line, "empty list item");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

long long Integer(const std::string& s, int line) {
  auto v = ParseInteger(s);
  if (!v) throw ParseError(line, "expected an integer, got '" + s + "'");
  return *v;
}

double Number(const std::string& s, int line) {
  auto v = ParseNumber(s);
  if (!v) throw ParseError(line, "expected a number, got '" + s + "'");
  return *v;
}

std::string Single(const std::vector<std::string>& items, const std::string& key, int line) {
  if (items.size() != 1) throw ParseError(line, key + " takes a single value");
  return items.front();
}

bool Boolean(const std::string& s, int line) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError(line, "expected true or false, got '" + s + "'");
}

}  // namespace

ExperimentConfig ParseExperimentConfig(std::string_view text, const std::string& base_dir) {
  ExperimentConfig config;
  std::set<std::string> seen;
  std::istringstream stream{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    std::string_view content = raw;
    if (auto hash = content.find('#'); hash != std::string_view::npos) content = content.substr(0, hash);
    content = Trim(content);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string_view::npos) throw ParseError(line, "expected 'key = value'");
    const std::string key(Trim(content.substr(0, eq)));
    if (!seen.insert(key).second) throw ParseError(line, "duplicate key '" + key + "'");
    const auto items = SplitList(content.substr(eq + 1), line);
    if (items.empty()) throw ParseError(line, "no value for '" + key + "'");

    if (key == "families") {
      for (const auto& s : items) {
        auto f = ParseGraphFamily(s);
        if (!f) throw ParseError(line, "unknown family '" + s + "'");
        config.families.push_back(*f);
      }
    } else if (key == "n") {
      for (const auto& s : items) config.n.push_back(static_cast<int>(Integer(s, line)));
    } else if (key == "levels") {
      for (const auto& s : items) config.levels.push_back(static_cast<int>(Integer(s, line)));
    } else if (key == "stretch") {
      for (const auto& s : items) config.stretch.push_back(Number(s, line));
    } else if (key == "instances_per_cell") {
      config.instances_per_cell = static_cast<int>(Integer(Single(items, key, line), line));
    } else if (key == "algorithms") {
      config.algorithms.clear();
      for (const auto& s : items) {
        if (s == "BU") config.algorithms.push_back(Algorithm::kBottomUp);
        else if (s == "TD") config.algorithms.push_back(Algorithm::kTopDown);
        else if (s == "MIN") config.algorithms.push_back(Algorithm::kMin);
        else if (s == "EXACT") config.algorithms.push_back(Algorithm::kExact);
        else throw ParseError(line, "unknown algorithm '" + s + "'");
      }
    } else if (key == "subsolvers") {
      config.subsolvers.clear();
      for (const auto& s : items) {
        auto v = ParseSubsetSolverStrategy(s);
        if (!v) throw ParseError(line, "unknown subsolver '" + s + "'");
        config.subsolvers.push_back(*v);
      }
    } else if (key == "seed") {
      const auto v = Integer(Single(items, key, line), line);
      if (v < 0) throw ParseError(line, "seed must be non-negative");
      config.seed = static_cast<std::uint64_t>(v);
    } else if (key == "er_eps") {
      config.er_eps = Number(Single(items, key, line), line);
    } else if (key == "ws_k") {
      config.ws_k = static_cast<int>(Integer(Single(items, key, line), line));
    } else if (key == "ws_beta") {
      config.ws_beta = Number(Single(items, key, line), line);
    } else if (key == "large_graph_mode") {
      config.large_graph_mode = Boolean(Single(items, key, line), line);
    } else if (key == "workers") {
      config.workers = static_cast<int>(Integer(Single(items, key, line), line));
    } else if (key == "node_limit") {
      config.node_limit = Integer(Single(items, key, line), line);
    } else if (key == "time_limit") {
      config.time_limit_seconds = Number(Single(items, key, line), line);
    } else if (key == "instances") {
      for (const auto& s : items) {
        std::filesystem::path p(s);
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        config.instance_files.push_back(p.string());
      }
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  ValidateConfig(config);
  return config;
}

ExperimentConfig ReadExperimentConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseExperimentConfig(buffer.str(), std::filesystem::path(path).parent_path().string());
}

void ValidateConfig(const ExperimentConfig& config) {
  if (config.instance_files.empty()) {
    if (config.families.empty() || config.n.empty() || config.levels.empty() || config.stretch.empty()) {
      throw ArgumentError("the grid needs families, n, levels and stretch (or instance files)");
    }
    for (int n : config.n) {
      if (n < 2) throw ArgumentError("n must be at least 2");
    }
    for (int l : config.levels) {
      if (l < 1) throw ArgumentError("levels must be at least 1");
    }
    if (config.instances_per_cell < 1) throw ArgumentError("instances_per_cell must be at least 1");
  }
  for (double t : config.stretch) {
    if (!(t >= 1.0)) throw ArgumentError("stretch must be at least 1");
  }
  if (config.algorithms.empty()) throw ArgumentError("no algorithms selected");
  if (config.subsolvers.empty()) throw ArgumentError("no subsolvers selected");
  if (config.workers < 1) throw ArgumentError("workers must be at least 1");
  if (config.node_limit < 1) throw ArgumentError("node_limit must be at least 1");
  if (config.time_limit_seconds < 0) throw ArgumentError("time_limit must be non-negative");
}

}  // namespace mlspanner
