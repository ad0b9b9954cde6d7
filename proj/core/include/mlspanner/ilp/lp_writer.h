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

#ifndef MLSPANNER_ILP_LP_WRITER_H_
#define MLSPANNER_ILP_LP_WRITER_H_

#include <string>

#include "mlspanner/ilp/model.h"

namespace mlspanner::ilp {

struct LpOptions {
  // Declare relaxable variables continuous in [0, 1] instead of binary.
  bool relax_flow_variables = false;
};

// CPLEX-style LP text: Minimize / Subject To / Bounds / General / Binary /
// End, empty sections omitted. Numbers use the shortest round-trip decimal
// form, so identical models give byte-identical text. A leading `\` comment
// lists relaxable variables when the model has any.
std::string EmitLpText(const IlpModel& model, const LpOptions& options = {});

}  // namespace mlspanner::ilp

#endif  // MLSPANNER_ILP_LP_WRITER_H_
