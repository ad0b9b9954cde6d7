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

#include "mlspanner/graph/stretch.h"

#include <map>
#include <string>

#include "mlspanner/errors.h"
#include "mlspanner/graph/shortest_paths.h"

namespace mlspanner {

std::vector<StretchViolation> StretchViolations(const Graph& g, const EdgeSet& h,
                                                const PairSet& pairs, double t) {
  if (h.universe() != g.edge_count()) {
    throw ArgumentError("subgraph contains edges that are not in the graph");
  }
  if (!(t >= 1.0)) throw ArgumentError("stretch factor must be >= 1, got " + std::to_string(t));

  // One search per distinct first endpoint, in both G and H.
  std::map<Vertex, std::pair<std::vector<double>, std::vector<double>>> rows;
  std::vector<StretchViolation> out;
  for (const VertexPair& p : pairs) {
    if (!g.HasVertex(p.first) || !g.HasVertex(p.second)) {
      throw ArgumentError("pair references a vertex outside the graph");
    }
    auto it = rows.find(p.first);
    if (it == rows.end()) {
      it = rows.emplace(p.first, std::make_pair(SingleSourceDistances(g, p.first),
                                                SingleSourceDistances(g, p.first, h)))
               .first;
    }
    const double dg = it->second.first[static_cast<size_t>(p.second)];
    const double dh = it->second.second[static_cast<size_t>(p.second)];
    const double bound = t * dg;
    // A pair disconnected in G cannot be served at all; it is a violation.
    if (dg == kInfinity || !LessOrEqual(dh, bound)) {
      out.push_back({p.first, p.second, dh, bound});
    }
  }
  return out;
}

}  // namespace mlspanner
