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

#ifndef MLSPANNER_HARNESS_CONFIG_H_
#define MLSPANNER_HARNESS_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlspanner/generators/generators.h"
#include "mlspanner/mlgs/algorithms.h"

namespace mlspanner {

enum class Algorithm { kBottomUp, kTopDown, kMin, kExact };
std::string_view ToString(Algorithm a);  // BU, TD, MIN, EXACT

// Experiment description. Text form is one `key = value` per line, values
// separated by commas and optionally wrapped in [ ]; `#` starts a comment:
//
//   families = erdos_renyi, watts_strogatz
//   n = [20, 40]
//   levels = 1, 2, 3
//   stretch = 1.2, 1.4, 2
//   instances_per_cell = 3
//   algorithms = BU, TD, MIN, EXACT
//   subsolvers = heuristic, exact
//   seed = 1
//
// Optional keys: er_eps (1), ws_k (6), ws_beta (0.2), large_graph_mode
// (false), workers (1), node_limit (10000000), time_limit (seconds, 0 =
// none) and instances (instance files, resolved against the config's
// directory; they replace the generated grid).
struct ExperimentConfig {
  std::vector<GraphFamily> families;
  std::vector<int> n;
  std::vector<int> levels;
  std::vector<double> stretch;
  int instances_per_cell = 3;
  std::vector<Algorithm> algorithms{Algorithm::kBottomUp, Algorithm::kTopDown, Algorithm::kMin,
                                    Algorithm::kExact};
  std::vector<SubsetSolverStrategy> subsolvers{SubsetSolverStrategy::kHeuristic};
  std::uint64_t seed = 1;
  double er_eps = 1.0;
  int ws_k = 6;
  double ws_beta = 0.2;
  bool large_graph_mode = false;
  int workers = 1;
  std::int64_t node_limit = 10'000'000;
  double time_limit_seconds = 0.0;
  std::vector<std::string> instance_files;
};

// Throws ParseError for malformed lines, unknown keys or bad values, and
// ArgumentError when the result is not runnable (empty grid, counts < 1).
ExperimentConfig ParseExperimentConfig(std::string_view text, const std::string& base_dir = "");
ExperimentConfig ReadExperimentConfig(const std::string& path);
void ValidateConfig(const ExperimentConfig& config);

}  // namespace mlspanner

#endif  // MLSPANNER_HARNESS_CONFIG_H_
