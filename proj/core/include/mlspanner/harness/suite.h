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

#ifndef MLSPANNER_HARNESS_SUITE_H_
#define MLSPANNER_HARNESS_SUITE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlspanner/harness/config.h"

namespace mlspanner {

enum class RecordStatus { kOk, kUnsolved, kInfeasible };
std::string_view ToString(RecordStatus s);

// What a record's ratio was divided by.
enum class RatioDenominator { kOpt, kMinBuTd, kNone };
std::string_view ToString(RatioDenominator d);  // opt, min_bu_td, none

struct ExperimentRecord {
  std::string family;  // generator family, or the file stem for instance files
  int n = 0;
  int m = 0;
  int levels = 0;
  double t = 0.0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kExact;
  std::string subsolver;  // heuristic, exact or none (EXACT rows)
  std::optional<double> cost;
  std::optional<double> opt_cost;
  std::optional<double> ratio;
  RatioDenominator denominator = RatioDenominator::kNone;
  double runtime_ms = 0.0;
  RecordStatus status = RecordStatus::kOk;
};

inline constexpr std::string_view kCsvHeader =
    "family,n,m,levels,t,seed,algorithm,subsolver,cost,opt_cost,ratio,ratio_denominator,runtime_ms,status";

// Called after every finished instance with (done, total).
using ProgressFn = std::function<void(int, int)>;

// One record per (instance, algorithm, subsolver); EXACT once per instance.
// Every solution is re-validated before it is recorded; failures become a
// status, never an exception. Output order is the grid order regardless of
// the number of workers.
std::vector<ExperimentRecord> RunSuite(const ExperimentConfig& config, const ProgressFn& progress = {});

std::string RecordsToCsv(const std::vector<ExperimentRecord>& records);

struct AggregateRow {
  std::string parameter;  // family, n, levels or t
  std::string value;
  std::string algorithm;
  std::string subsolver;
  int count = 0;
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
};

inline constexpr std::string_view kAggregateHeader =
    "parameter,value,algorithm,subsolver,count,min,q1,median,q3,max";

// Ratio quartiles (linear interpolation) of the heuristic records, grouped
// by each grid parameter in turn.
std::vector<AggregateRow> Aggregate(const std::vector<ExperimentRecord>& records);
std::string AggregatesToCsv(const std::vector<AggregateRow>& rows);

// Writes results.csv and aggregate.csv into `dir` (created if needed).
void WriteSuiteOutputs(const std::vector<ExperimentRecord>& records, const std::string& dir);

}  // namespace mlspanner

#endif  // MLSPANNER_HARNESS_SUITE_H_
