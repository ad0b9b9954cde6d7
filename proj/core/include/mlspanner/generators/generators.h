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

#ifndef MLSPANNER_GENERATORS_GENERATORS_H_
#define MLSPANNER_GENERATORS_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlspanner/graph/graph.h"
#include "mlspanner/graph/instance.h"

namespace mlspanner {

enum class GraphFamily { kErdosRenyi, kWattsStrogatz };

std::string_view ToString(GraphFamily family);  // "erdos_renyi" / "watts_strogatz"
// Also accepts the short forms "er" and "ws".
std::optional<GraphFamily> ParseGraphFamily(std::string_view text);

struct GeneratorSpec {
  GraphFamily family = GraphFamily::kErdosRenyi;
  int n = 20;
  double er_eps = 1.0;
  int ws_k = 6;
  double ws_beta = 0.2;
  int levels = 1;
  double stretch = 2.0;
  std::uint64_t seed = 0;
};

// Throws ArgumentError unless n >= 2, eps > 0, K even with 0 < K < n,
// 0 <= beta <= 1, levels >= 1 and stretch >= 1.
void ValidateSpec(const GeneratorSpec& spec);

// p = (1 + eps) ln n / n, clamped to 1.
double ErdosRenyiProbability(int n, double eps);

// One draw: every pair {i, j} (scanned in lexicographic order) is an edge
// with probability p; weights are uniform on {1, ..., 10}. May be
// disconnected.
Graph ErdosRenyi(int n, double eps, std::uint64_t seed);

// Ring lattice joining each vertex to K/2 successors, then each lattice edge
// (v, v + k), scanned by vertex and then offset, has its far endpoint moved
// with probability beta to a uniformly chosen vertex that is neither v nor
// already adjacent to v. Edge count stays nK/2; weights uniform on {1..10}.
Graph WattsStrogatz(int n, int k, double beta, std::uint64_t seed);

bool IsConnected(const Graph& g);

// |T_i| = floor(n (l - i + 1) / (l + 1)).
int TerminalCount(int n, int levels, int i);

// T_1 drawn uniformly from V and T_i uniformly from T_{i-1}; each set is
// returned sorted. Throws ArgumentError ("instance degenerate") when
// |T_l| < 2.
std::vector<std::vector<Vertex>> SampleNestedTerminals(int n, int levels, std::uint64_t seed);

struct GeneratedInstance {
  MlgsInstance instance;
  int attempts = 1;                 // graph draws needed to get a connected one
  std::vector<std::string> header;  // provenance, written as comments
};

// Graph draws use seed, seed + 1, ... until one is connected (at most 100;
// ArgumentError afterwards). Terminals always come from `seed`, so they do
// not depend on how many draws were needed.
GeneratedInstance GenerateInstance(const GeneratorSpec& spec);

}  // namespace mlspanner

#endif  // MLSPANNER_GENERATORS_GENERATORS_H_
