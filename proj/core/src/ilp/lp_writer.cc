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

#include "mlspanner/ilp/lp_writer.h"

#include <cmath>
#include <sstream>

#include "mlspanner/format.h"

namespace mlspanner::ilp {
namespace {

// Keeps lines well under the 255-character limit some readers impose.
constexpr int kTermsPerLine = 6;

void WriteTerms(std::ostringstream& out, const IlpModel& model, const std::vector<Term>& terms) {
  int written = 0;
  for (const Term& t : terms) {
    if (t.coef == 0.0) continue;
    if (written > 0 && written % kTermsPerLine == 0) out << "\n   ";
    const bool negative = t.coef < 0;
    if (written > 0) out << (negative ? " - " : " + ");
    else if (negative) out << "- ";
    out << FormatNumber(std::abs(t.coef)) << ' ' << model.variable(t.var).name;
    ++written;
  }
  if (written == 0) out << "0";
}

VariableKind EffectiveKind(const Variable& v, const LpOptions& options) {
  if (v.relaxable && options.relax_flow_variables) return VariableKind::kContinuous;
  return v.kind;
}

}  // namespace

std::string EmitLpText(const IlpModel& model, const LpOptions& options) {
  std::ostringstream out;
  int relaxable = 0;
  for (const Variable& v : model.variables()) relaxable += v.relaxable ? 1 : 0;
  if (relaxable > 0) {
    out << "\\ " << relaxable << " arc variables (xa_*) may be relaxed to continuous [0,1]"
        << (options.relax_flow_variables ? "; relaxed here" : "") << "\n";
  }

  out << "Minimize\n obj: ";
  WriteTerms(out, model, model.objective());
  out << "\nSubject To\n";
  for (const Constraint& c : model.constraints()) {
    out << ' ' << c.name << ": ";
    WriteTerms(out, model, c.terms);
    switch (c.sense) {
      case Sense::kLessEqual: out << " <= "; break;
      case Sense::kGreaterEqual: out << " >= "; break;
      case Sense::kEqual: out << " = "; break;
    }
    out << FormatNumber(c.rhs) << '\n';
  }

  // Binaries at their default [0, 1] need no bounds line.
  std::ostringstream bounds;
  std::ostringstream general;
  std::ostringstream binary;
  for (const Variable& v : model.variables()) {
    const VariableKind kind = EffectiveKind(v, options);
    if (v.lower == v.upper) {
      bounds << ' ' << v.name << " = " << FormatNumber(v.lower) << '\n';
    } else if (kind != VariableKind::kBinary || v.lower != 0.0 || v.upper != 1.0) {
      bounds << ' ' << FormatNumber(v.lower) << " <= " << v.name << " <= " << FormatNumber(v.upper)
             << '\n';
    }
    if (kind == VariableKind::kInteger) general << ' ' << v.name << '\n';
    if (kind == VariableKind::kBinary) binary << ' ' << v.name << '\n';
  }
  if (!bounds.str().empty()) out << "Bounds\n" << bounds.str();
  if (!general.str().empty()) out << "General\n" << general.str();
  if (!binary.str().empty()) out << "Binary\n" << binary.str();
  out << "End\n";
  return out.str();
}

}  // namespace mlspanner::ilp
