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

#include "mlspanner/harness/suite.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "mlspanner/errors.h"
#include "mlspanner/format.h"
#include "mlspanner/generators/rng.h"
#include "mlspanner/graph/instance.h"
#include "mlspanner/ilp/exact_solver.h"
#include "mlspanner/mlgs/algorithms.h"
#include "mlspanner/mlgs/graded_subgraph.h"

namespace mlspanner {

std::string_view ToString(RecordStatus s) {
  switch (s) {
    case RecordStatus::kOk: return "ok";
    case RecordStatus::kUnsolved: return "unsolved";
    case RecordStatus::kInfeasible: return "infeasible";
  }
  return "infeasible";
}

std::string_view ToString(RatioDenominator d) {
  switch (d) {
    case RatioDenominator::kOpt: return "opt";
    case RatioDenominator::kMinBuTd: return "min_bu_td";
    case RatioDenominator::kNone: return "none";
  }
  return "none";
}

namespace {

struct Job {
  std::string family;
  std::optional<GeneratorSpec> spec;  // generated instance
  std::string file;                   // or an instance file
};

std::vector<Job> PlanJobs(const ExperimentConfig& config) {
  std::vector<Job> jobs;
  if (!config.instance_files.empty()) {
    for (const auto& file : config.instance_files) {
      jobs.push_back({std::filesystem::path(file).stem().string(), std::nullopt, file});
    }
    return jobs;
  }
  for (GraphFamily family : config.families) {
    for (int n : config.n) {
      for (int levels : config.levels) {
        for (size_t ti = 0; ti < config.stretch.size(); ++ti) {
          for (int k = 0; k < config.instances_per_cell; ++k) {
            GeneratorSpec spec;
            spec.family = family;
            spec.n = n;
            spec.er_eps = config.er_eps;
            spec.ws_k = config.ws_k;
            spec.ws_beta = config.ws_beta;
            spec.levels = levels;
            spec.stretch = config.stretch[ti];
            // One seed per (cell, instance), shared by every algorithm and
            // subsolver so their results are paired.
            spec.seed = MixSeed({config.seed, static_cast<std::uint64_t>(family), static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(levels), ti, static_cast<std::uint64_t>(k)}) >>
                        16;
            jobs.push_back({std::string(ToString(family)), spec, ""});
          }
        }
      }
    }
  }
  return jobs;
}

double ElapsedMs(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

struct Outcome {
  RecordStatus status = RecordStatus::kOk;
  std::optional<double> cost;
  double runtime_ms = 0.0;
};

Outcome Checked(const MlgsInstance& inst, const GradedSubgraph& sol, double runtime_ms) {
  Outcome out;
  out.runtime_ms = runtime_ms;
  out.cost = SolutionCost(inst, sol);
  if (!ValidateMlgs(inst, sol).empty()) out.status = RecordStatus::kInfeasible;
  return out;
}

template <class Fn>
std::pair<Outcome, GradedSubgraph> Timed(const MlgsInstance& inst, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  try {
    GradedSubgraph sol = fn();
    return {Checked(inst, sol, ElapsedMs(start)), sol};
  } catch (const DisconnectedError&) {
    return {Outcome{RecordStatus::kInfeasible, std::nullopt, ElapsedMs(start)}, {}};
  } catch (const SolverError&) {
    return {Outcome{RecordStatus::kUnsolved, std::nullopt, ElapsedMs(start)}, {}};
  }
}

bool Wants(const ExperimentConfig& config, Algorithm a) {
  return std::find(config.algorithms.begin(), config.algorithms.end(), a) != config.algorithms.end();
}

std::vector<ExperimentRecord> RunJob(const Job& job, const ExperimentConfig& config) {
  ExperimentRecord base;
  base.family = job.family;
  MlgsInstance inst;
  bool usable = true;
  try {
    if (job.spec) {
      base.n = job.spec->n;
      base.levels = job.spec->levels;
      base.t = job.spec->stretch;
      base.seed = job.spec->seed;
      inst = GenerateInstance(*job.spec).instance;
    } else {
      inst = ReadInstanceFile(job.file);
      base.n = inst.graph.vertex_count();
      base.levels = inst.level_count();
      base.t = inst.stretch;
    }
    base.m = inst.graph.edge_count();
  } catch (const std::exception&) {
    usable = false;
  }

  std::vector<ExperimentRecord> records;
  auto emit = [&](Algorithm a, std::string subsolver, const Outcome& o) {
    ExperimentRecord r = base;
    r.algorithm = a;
    r.subsolver = std::move(subsolver);
    r.cost = o.cost;
    r.runtime_ms = o.runtime_ms;
    r.status = o.status;
    records.push_back(std::move(r));
  };
  if (!usable) {
    const Outcome failed{RecordStatus::kInfeasible, std::nullopt, 0.0};
    if (Wants(config, Algorithm::kExact) && !config.large_graph_mode) emit(Algorithm::kExact, "none", failed);
    for (auto s : config.subsolvers) {
      for (Algorithm a : config.algorithms) {
        if (a != Algorithm::kExact) emit(a, std::string(ToString(s)), failed);
      }
    }
    return records;
  }

  ilp::ExactOptions options;
  options.node_limit = config.node_limit;
  options.time_limit_seconds = config.time_limit_seconds;

  std::optional<double> opt;
  if (Wants(config, Algorithm::kExact) && !config.large_graph_mode) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      const ilp::ExactResult r = ilp::SolveExact(inst, options);
      o.runtime_ms = ElapsedMs(start);
      if (r.status == ilp::ExactStatus::kInfeasible) {
        o.status = RecordStatus::kInfeasible;
      } else {
        o = Checked(inst, r.solution, o.runtime_ms);
        if (r.status == ilp::ExactStatus::kUnsolved && o.status == RecordStatus::kOk) {
          o.status = RecordStatus::kUnsolved;
        }
        if (o.status == RecordStatus::kOk) opt = o.cost;
      }
    } catch (const SolverError&) {
      o = Outcome{RecordStatus::kUnsolved, std::nullopt, ElapsedMs(start)};
    }
    emit(Algorithm::kExact, "none", o);
    if (opt) {
      records.back().opt_cost = opt;
      records.back().ratio = 1.0;
      records.back().denominator = RatioDenominator::kOpt;
    }
  }

  for (SubsetSolverStrategy strategy : config.subsolvers) {
    const SubsetSolver solver = ilp::MakeSubsetSolver(strategy, options);
    auto [bu, bu_sol] = Timed(inst, [&] { return BottomUp(inst, solver); });
    auto [td, td_sol] = Timed(inst, [&] { return TopDown(inst, solver); });
    // MIN is the cheaper of the two (TD on ties); it costs both runs.
    Outcome mn;
    mn.runtime_ms = bu.runtime_ms + td.runtime_ms;
    if (bu.status != RecordStatus::kOk || td.status != RecordStatus::kOk) {
      mn.status = bu.status != RecordStatus::kOk ? bu.status : td.status;
    } else {
      const bool bu_cheaper = *bu.cost < *td.cost && !ApproxEqual(*bu.cost, *td.cost);
      mn.cost = bu_cheaper ? bu.cost : td.cost;
    }
    const std::string name(ToString(strategy));
    for (Algorithm a : config.algorithms) {
      if (a == Algorithm::kExact) continue;
      const Outcome& o = a == Algorithm::kBottomUp ? bu : a == Algorithm::kTopDown ? td : mn;
      emit(a, name, o);
      ExperimentRecord& r = records.back();
      if (r.status != RecordStatus::kOk || !r.cost) continue;
      if (opt) {
        r.opt_cost = opt;
        r.ratio = *r.cost / *opt;
        r.denominator = RatioDenominator::kOpt;
      } else if (config.large_graph_mode && mn.cost) {
        r.ratio = *r.cost / *mn.cost;
        r.denominator = RatioDenominator::kMinBuTd;
      }
    }
  }
  return records;
}

std::string Optional(const std::optional<double>& v) { return v ? FormatNumber(*v) : std::string(); }

double Quantile(const std::vector<double>& sorted, double q) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const size_t lo = static_cast<size_t>(std::floor(h));
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

std::vector<ExperimentRecord> RunSuite(const ExperimentConfig& config, const ProgressFn& progress) {
  ValidateConfig(config);
  const std::vector<Job> jobs = PlanJobs(config);
  std::vector<std::vector<ExperimentRecord>> results(jobs.size());
  std::atomic<size_t> next{0};
  std::mutex mu;
  int done = 0;
  auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      results[i] = RunJob(jobs[i], config);
      std::lock_guard<std::mutex> lock(mu);
      ++done;
      if (progress) progress(done, static_cast<int>(jobs.size()));
    }
  };
  const int threads = std::min<int>(config.workers, static_cast<int>(std::max<size_t>(jobs.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<ExperimentRecord> out;
  for (auto& batch : results) {
    for (auto& r : batch) out.push_back(std::move(r));
  }
  return out;
}

std::string RecordsToCsv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const ExperimentRecord& r : records) {
    out << r.family << ',' << r.n << ',' << r.m << ',' << r.levels << ',' << FormatNumber(r.t) << ','
        << r.seed << ',' << ToString(r.algorithm) << ',' << r.subsolver << ',' << Optional(r.cost) << ','
        << Optional(r.opt_cost) << ',' << Optional(r.ratio) << ',' << ToString(r.denominator) << ','
        << FormatNumber(std::round(r.runtime_ms * 1000.0) / 1000.0) << ',' << ToString(r.status) << '\n';
  }
  return out.str();
}

std::vector<AggregateRow> Aggregate(const std::vector<ExperimentRecord>& records) {
  struct Key {
    double numeric;
    std::string value;
    int algorithm;
    int subsolver;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<AggregateRow> out;
  const std::vector<std::string> parameters{"family", "n", "levels", "t"};
  for (const std::string& parameter : parameters) {
    std::map<Key, std::vector<double>> groups;
    for (const ExperimentRecord& r : records) {
      if (r.algorithm == Algorithm::kExact || r.status != RecordStatus::kOk || !r.ratio) continue;
      Key key{0.0, "", static_cast<int>(r.algorithm), r.subsolver == "exact" ? 1 : 0};
      if (parameter == "family") {
        key.value = r.family;
      } else {
        key.numeric = parameter == "n" ? r.n : parameter == "levels" ? r.levels : r.t;
        key.value = FormatNumber(key.numeric);
      }
      groups[key].push_back(*r.ratio);
    }
    for (auto& [key, values] : groups) {
      std::sort(values.begin(), values.end());
      AggregateRow row;
      row.parameter = parameter;
      row.value = key.value;
      row.algorithm = std::string(ToString(static_cast<Algorithm>(key.algorithm)));
      row.subsolver = key.subsolver == 1 ? "exact" : "heuristic";
      row.count = static_cast<int>(values.size());
      row.min = values.front();
      row.q1 = Quantile(values, 0.25);
      row.median = Quantile(values, 0.5);
      row.q3 = Quantile(values, 0.75);
      row.max = values.back();
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::string AggregatesToCsv(const std::vector<AggregateRow>& rows) {
  std::ostringstream out;
  out << kAggregateHeader << '\n';
  for (const AggregateRow& r : rows) {
    out << r.parameter << ',' << r.value << ',' << r.algorithm << ',' << r.subsolver << ',' << r.count << ','
        << FormatNumber(r.min) << ',' << FormatNumber(r.q1) << ',' << FormatNumber(r.median) << ','
        << FormatNumber(r.q3) << ',' << FormatNumber(r.max) << '\n';
  }
  return out.str();
}

void WriteSuiteOutputs(const std::vector<ExperimentRecord>& records, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream out(std::filesystem::path(dir) / name);
    if (!out) throw ArgumentError("cannot write " + (std::filesystem::path(dir) / name).string());
    out << text;
  };
  write("results.csv", RecordsToCsv(records));
  write("aggregate.csv", AggregatesToCsv(Aggregate(records)));
}

}  // namespace mlspanner
