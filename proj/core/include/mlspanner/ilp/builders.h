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

#ifndef MLSPANNER_ILP_BUILDERS_H_
#define MLSPANNER_ILP_BUILDERS_H_

#include "mlspanner/graph/graph.h"
#include "mlspanner/graph/instance.h"
#include "mlspanner/ilp/model.h"

namespace mlspanner::ilp {

// Arc-flow formulation of the pairwise spanner problem:
//
//   min  sum_e c_e x_e
//   s.t. len_s_t:        sum_a c_a xa_a^st <= t * d_G(s, t)       per pair
//        flow_s_t_i:     out(i) - in(i) = +1 / -1 / 0             per pair, vertex
//        out_s_t_i:      out(i) <= 1                              per pair, vertex
//        link_s_t_u_v:   xa_uv^st + xa_vu^st - x_e <= 0           per pair, edge
//        x, xa binary
//
// Variable count is |E| + 2|E||K|. Throws DisconnectedError if a pair of K
// is disconnected and ArgumentError if t < 1.
IlpModel BuildPairwiseModel(const Graph& g, const PairSet& pairs, double t);

// Grade-of-service variant for a multi-level instance. The edge variables
// become integers y_e in [0, l] and each arc is coupled to its edge by
//   grade_s_t_i_j:  y_e - m_st * xa_ij^st >= 0
// where m_st = min(R(s), R(t)). Pairs range over T_1 with s < t.
IlpModel BuildMlgsModel(const MlgsInstance& inst);

}  // namespace mlspanner::ilp

#endif  // MLSPANNER_ILP_BUILDERS_H_
