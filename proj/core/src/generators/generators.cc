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

#include "mlspanner/generators/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mlspanner/errors.h"
#include "mlspanner/format.h"
#include "mlspanner/generators/rng.h"

namespace mlspanner {
namespace {

constexpr int kMaxAttempts = 100;
constexpr int kMaxWeight = 10;

Graph WithWeights(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::uint64_t seed) {
  Rng weights(seed, Stream::kWeights);
  Graph g(n);
  for (auto [u, v] : edges) g.AddEdge(u, v, weights.Between(1, kMaxWeight));
  return g;
}

}  // namespace

std::string_view ToString(GraphFamily family) {
  return family == GraphFamily::kErdosRenyi ? "erdos_renyi" : "watts_strogatz";
}

std::optional<GraphFamily> ParseGraphFamily(std::string_view text) {
  if (text == "erdos_renyi" || text == "er") return GraphFamily::kErdosRenyi;
  if (text == "watts_strogatz" || text == "ws") return GraphFamily::kWattsStrogatz;
  return std::nullopt;
}

void ValidateSpec(const GeneratorSpec& spec) {
  if (spec.n < 2) throw ArgumentError("n must be at least 2");
  if (spec.levels < 1) throw ArgumentError("levels must be at least 1");
  if (!(spec.stretch >= 1.0)) throw ArgumentError("stretch must be at least 1");
  if (spec.family == GraphFamily::kErdosRenyi) {
    if (!(spec.er_eps > 0.0)) throw ArgumentError("eps must be positive");
  } else {
    if (spec.ws_k <= 0 || spec.ws_k % 2 != 0 || spec.ws_k >= spec.n) {
      throw ArgumentError("K must be even with 0 < K < n");
    }
    if (!(spec.ws_beta >= 0.0 && spec.ws_beta <= 1.0)) throw ArgumentError("beta must lie in [0, 1]");
  }
}

double ErdosRenyiProbability(int n, double eps) {
  return std::min(1.0, (1.0 + eps) * std::log(static_cast<double>(n)) / n);
}

Graph ErdosRenyi(int n, double eps, std::uint64_t seed) {
  if (n < 2 || !(eps > 0.0)) throw ArgumentError("Erdos-Renyi needs n >= 2 and eps > 0");
  const double p = ErdosRenyiProbability(n, eps);
  Rng topology(seed, Stream::kTopology);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (topology.Unit() < p) edges.emplace_back(u, v);
    }
  }
  return WithWeights(n, edges, seed);
}

Graph WattsStrogatz(int n, int k, double beta, std::uint64_t seed) {
  if (n < 2 || k <= 0 || k % 2 != 0 || k >= n) throw ArgumentError("Watts-Strogatz needs even 0 < K < n");
  if (!(beta >= 0.0 && beta <= 1.0)) throw ArgumentError("beta must lie in [0, 1]");
  std::vector<std::vector<char>> adj(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  auto link = [&](Vertex a, Vertex b, char on) {
    adj[static_cast<size_t>(a)][static_cast<size_t>(b)] = on;
    adj[static_cast<size_t>(b)][static_cast<size_t>(a)] = on;
  };
  for (Vertex v = 0; v < n; ++v) {
    for (int off = 1; off <= k / 2; ++off) link(v, (v + off) % n, 1);
  }
  Rng topology(seed, Stream::kTopology);
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < n; ++v) {
    for (int off = 1; off <= k / 2; ++off) {
      const Vertex far = (v + off) % n;
      if (topology.Unit() >= beta) continue;
      // The lattice edge may already have been rewired away by an earlier
      // step; then there is nothing to move.
      if (!adj[static_cast<size_t>(v)][static_cast<size_t>(far)]) continue;
      candidates.clear();
      for (Vertex w = 0; w < n; ++w) {
        if (w != v && !adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) candidates.push_back(w);
      }
      if (candidates.empty()) continue;
      const Vertex target = candidates[static_cast<size_t>(topology.Below(candidates.size()))];
      link(v, far, 0);
      link(v, target, 1);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adj[static_cast<size_t>(u)][static_cast<size_t>(v)]) edges.emplace_back(u, v);
    }
  }
  return WithWeights(n, edges, seed);
}

bool IsConnected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.neighbors(x)) {
      if (seen[static_cast<size_t>(inc.to)]) continue;
      seen[static_cast<size_t>(inc.to)] = 1;
      ++reached;
      stack.push_back(inc.to);
    }
  }
  return reached == g.vertex_count();
}

int TerminalCount(int n, int levels, int i) {
  return static_cast<int>(static_cast<long long>(n) * (levels - i + 1) / (levels + 1));
}

std::vector<std::vector<Vertex>> SampleNestedTerminals(int n, int levels, std::uint64_t seed) {
  if (n < 2 || levels < 1) throw ArgumentError("terminal sampling needs n >= 2 and levels >= 1");
  if (TerminalCount(n, levels, levels) < 2) {
    throw ArgumentError("instance degenerate: top level would have " +
                        std::to_string(TerminalCount(n, levels, levels)) + " terminals");
  }
  Rng rng(seed, Stream::kTerminals);
  std::vector<Vertex> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::vector<Vertex>> out;
  for (int i = 1; i <= levels; ++i) {
    const size_t size = static_cast<size_t>(TerminalCount(n, levels, i));
    // Partial Fisher-Yates: the first `size` slots become a uniform sample.
    for (size_t k = 0; k < size; ++k) {
      const size_t pick = k + static_cast<size_t>(rng.Below(pool.size() - k));
      std::swap(pool[k], pool[pick]);
    }
    pool.resize(size);
    std::vector<Vertex> level = pool;
    std::sort(level.begin(), level.end());
    out.push_back(std::move(level));
  }
  return out;
}

GeneratedInstance GenerateInstance(const GeneratorSpec& spec) {
  ValidateSpec(spec);
  GeneratedInstance out;
  auto terminals = SampleNestedTerminals(spec.n, spec.levels, spec.seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(attempt);
    Graph g = spec.family == GraphFamily::kErdosRenyi
                  ? ErdosRenyi(spec.n, spec.er_eps, seed)
                  : WattsStrogatz(spec.n, spec.ws_k, spec.ws_beta, seed);
    if (!IsConnected(g)) continue;
    out.instance.graph = std::move(g);
    out.instance.terminals = std::move(terminals);
    out.instance.stretch = spec.stretch;
    out.attempts = attempt + 1;
    std::string params = spec.family == GraphFamily::kErdosRenyi
                             ? "eps=" + FormatNumber(spec.er_eps)
                             : "K=" + std::to_string(spec.ws_k) + " beta=" + FormatNumber(spec.ws_beta);
    out.header = {
        "generator " + std::string(ToString(spec.family)) + " n=" + std::to_string(spec.n) + " " + params,
        "levels=" + std::to_string(spec.levels) + " stretch=" + FormatNumber(spec.stretch),
        "seed=" + std::to_string(spec.seed) + " graph_seed=" + std::to_string(seed) +
            " attempts=" + std::to_string(out.attempts),
    };
    return out;
  }
  throw ArgumentError("no connected graph after " + std::to_string(kMaxAttempts) + " draws");
}

}  // namespace mlspanner
