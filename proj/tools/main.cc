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

// mlspanner: generate instances, run the heuristics and the exact solver,
// verify solutions, write ILP models and run experiment grids.
//
// Exit codes: 0 success, 1 verification failed, 2 usage, 3 unreadable or
// malformed input, 4 infeasible instance, 5 solver limit reached. Errors
// are reported on stderr as one JSON object per line.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlspanner/errors.h"
#include "mlspanner/format.h"
#include "mlspanner/generators/generators.h"
#include "mlspanner/graph/instance.h"
#include "mlspanner/harness/config.h"
#include "mlspanner/harness/suite.h"
#include "mlspanner/ilp/builders.h"
#include "mlspanner/ilp/exact_solver.h"
#include "mlspanner/ilp/lp_writer.h"
#include "mlspanner/ilp/reductions.h"
#include "mlspanner/mlgs/algorithms.h"
#include "mlspanner/mlgs/graded_subgraph.h"

namespace {

using namespace mlspanner;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInput = 3, kInfeasible = 4, kUnsolved = 5 };

// Thrown by the subcommands to leave with a specific code.
struct Failure {
  int code;
  nlohmann::json diagnostic;
};

void Diagnose(const nlohmann::json& j) { std::cerr << j.dump() << '\n'; }

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) {
    throw Failure{kInput, {{"error", "io"}, {"message", "cannot write " + path}}};
  }
}

struct GenerateArgs {
  std::string family;
  int n = 20;
  double eps = 1.0;
  int k = 6;
  double beta = 0.2;
  int levels = 1;
  double stretch = 2.0;
  std::uint64_t seed = 0;
  std::string out;
};

int RunGenerate(const GenerateArgs& a) {
  GeneratorSpec spec;
  const auto family = ParseGraphFamily(a.family);
  if (!family) throw Failure{kUsage, {{"error", "usage"}, {"message", "unknown family " + a.family}}};
  spec.family = *family;
  spec.n = a.n;
  spec.er_eps = a.eps;
  spec.ws_k = a.k;
  spec.ws_beta = a.beta;
  spec.levels = a.levels;
  spec.stretch = a.stretch;
  spec.seed = a.seed;
  const GeneratedInstance gen = GenerateInstance(spec);
  WriteInstanceFile(a.out, gen.instance, gen.header);
  std::cout << "wrote " << a.out << " (" << gen.instance.graph.vertex_count() << " vertices, "
            << gen.instance.graph.edge_count() << " edges)\n";
  return kOk;
}

struct SolveArgs {
  std::string file;
  std::string algo = "min";
  std::string subsolver = "heuristic";
  std::int64_t node_limit = 10'000'000;
  double time_limit = 0.0;
  std::string out;
};

ilp::ExactOptions Options(const SolveArgs& a) {
  ilp::ExactOptions options;
  options.node_limit = a.node_limit;
  options.time_limit_seconds = a.time_limit;
  return options;
}

void EmitSolution(const SolveArgs& a, const MlgsInstance& inst, const GradedSubgraph& sol) {
  const std::string text = SerializeGradedSubgraph(inst.graph, sol);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    WriteText(a.out, text);
  }
}

int RunHeuristic(const SolveArgs& a) {
  const MlgsInstance inst = ReadInstanceFile(a.file);
  const auto strategy = ParseSubsetSolverStrategy(a.subsolver);
  if (!strategy) throw Failure{kUsage, {{"error", "usage"}, {"message", "unknown subsolver " + a.subsolver}}};
  const SubsetSolver solver = ilp::MakeSubsetSolver(*strategy, Options(a));
  GradedSubgraph sol;
  if (a.algo == "bu") {
    sol = BottomUp(inst, solver);
  } else if (a.algo == "td") {
    sol = TopDown(inst, solver);
  } else if (a.algo == "min") {
    sol = Combined(inst, solver).solution;
  } else {
    throw Failure{kUsage, {{"error", "usage"}, {"message", "unknown algorithm " + a.algo}}};
  }
  std::cout << "cost " << FormatNumber(SolutionCost(inst, sol)) << '\n';
  EmitSolution(a, inst, sol);
  return kOk;
}

int RunExact(const SolveArgs& a) {
  const MlgsInstance inst = ReadInstanceFile(a.file);
  const ilp::ExactResult r = ilp::SolveExact(inst, Options(a));
  switch (r.status) {
    case ilp::ExactStatus::kOptimal:
      std::cout << "optimum " << FormatNumber(r.objective) << '\n';
      EmitSolution(a, inst, r.solution);
      return kOk;
    case ilp::ExactStatus::kInfeasible:
      std::cout << "infeasible\n";
      return kInfeasible;
    case ilp::ExactStatus::kUnsolved:
      break;
  }
  std::cout << "unsolved\n";
  if (r.solution.edge_count() > 0) {
    std::cout << "incumbent " << FormatNumber(r.objective) << "\nlower_bound " << FormatNumber(r.lower_bound)
              << '\n';
    if (!a.out.empty()) WriteText(a.out, SerializeGradedSubgraph(inst.graph, r.solution));
  }
  return kUnsolved;
}

int RunVerify(const std::string& file, const std::string& solution) {
  const MlgsInstance inst = ReadInstanceFile(file);
  const GradedSubgraph sol = ReadGradedSubgraphFile(solution, inst.graph);
  const auto violations = ValidateMlgs(inst, sol);
  if (violations.empty()) {
    std::cout << "valid cost " << FormatNumber(SolutionCost(inst, sol)) << '\n';
    return kOk;
  }
  for (const LevelViolation& v : violations) {
    std::cout << "violation level " << v.level << " pair " << v.u << ' ' << v.v << " distance "
              << FormatNumber(v.subgraph_distance) << " bound " << FormatNumber(v.bound) << '\n';
  }
  return kVerifyFailed;
}

struct LpArgs {
  std::string file;
  std::string out;
  bool reduce = false;
  bool pairwise = false;
  bool relax = false;
};

int RunEmitLp(const LpArgs& a) {
  MlgsInstance inst = ReadInstanceFile(a.file);
  ValidateInstance(inst);
  const PairSet pairs = PairSet::AllPairs(inst.level(1));
  ilp::Fixings fixings;
  if (a.reduce) {
    ilp::Reduction red = ilp::ReduceInstance(inst.graph, pairs, inst.stretch);
    if (red.infeasible) {
      throw Failure{kInfeasible, {{"error", "infeasible"}, {"message", red.conflict}}};
    }
    // The reduced graph keeps every terminal-pair distance, so the models
    // built on it have the same budgets.
    inst.graph = std::move(red.graph);
    fixings = std::move(red.fixings);
  }
  ilp::IlpModel model = a.pairwise ? ilp::BuildPairwiseModel(inst.graph, pairs, inst.stretch)
                                   : ilp::BuildMlgsModel(inst);
  if (a.reduce) {
    ilp::ApplyFixings(model, fixings);
    WriteText(a.out + ".fixings", ilp::SerializeFixings(fixings));
  }
  ilp::LpOptions options;
  options.relax_flow_variables = a.relax;
  WriteText(a.out, ilp::EmitLpText(model, options));
  std::cout << "wrote " << a.out << " (" << model.variable_count() << " variables, " << model.constraint_count()
            << " constraints)\n";
  return kOk;
}

int RunExperiment(const std::string& config_path, const std::string& out_dir, int workers, bool quiet) {
  ExperimentConfig config = ReadExperimentConfig(config_path);
  if (workers > 0) config.workers = workers;
  const auto start = std::chrono::steady_clock::now();
  const auto records = RunSuite(config, [&](int done, int total) {
    if (!quiet) std::cerr << "\r" << done << "/" << total << " instances" << std::flush;
  });
  if (!quiet) std::cerr << '\n';
  WriteSuiteOutputs(records, out_dir);
  int bad = 0;
  for (const auto& r : records) bad += r.status != RecordStatus::kOk;
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << records.size() << " records (" << bad << " not ok) in " << FormatNumber(std::round(seconds * 10) / 10)
            << " s; wrote " << (std::filesystem::path(out_dir) / "results.csv").string() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-level graph spanners: heuristics, exact solver and experiments"};
  app.require_subcommand(1);
  int code = kOk;

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a random instance");
  generate->add_option("--family", gen.family, "erdos_renyi (er) or watts_strogatz (ws)")->required();
  generate->add_option("--n", gen.n, "Vertex count")->required();
  generate->add_option("--eps", gen.eps, "Erdos-Renyi density offset");
  generate->add_option("--K", gen.k, "Watts-Strogatz lattice degree (even)");
  generate->add_option("--beta", gen.beta, "Watts-Strogatz rewiring probability");
  generate->add_option("--levels", gen.levels, "Number of levels");
  generate->add_option("--stretch", gen.stretch, "Stretch factor");
  generate->add_option("--seed", gen.seed, "Seed");
  generate->add_option("-o,--output", gen.out, "Instance file")->required();
  generate->callback([&] { code = RunGenerate(gen); });

  SolveArgs heur;
  auto* heuristic = app.add_subcommand("heuristic", "Run BU, TD or MIN");
  heuristic->add_option("--algo", heur.algo, "bu, td or min")->check(CLI::IsMember({"bu", "td", "min"}));
  heuristic->add_option("--subsolver", heur.subsolver, "heuristic or exact")
      ->check(CLI::IsMember({"heuristic", "exact"}));
  heuristic->add_option("--node-limit", heur.node_limit, "Node limit of exact subsolves");
  heuristic->add_option("--time-limit", heur.time_limit, "Seconds per exact subsolve, 0 = none");
  heuristic->add_option("-o,--output", heur.out, "Solution file (default: stdout)");
  heuristic->add_option("file", heur.file, "Instance file")->required();
  heuristic->callback([&] { code = RunHeuristic(heur); });

  SolveArgs ex;
  auto* exact = app.add_subcommand("exact", "Solve to optimality");
  exact->add_option("--node-limit", ex.node_limit, "Branch-and-cut node limit");
  exact->add_option("--time-limit", ex.time_limit, "Seconds, 0 = none");
  exact->add_option("-o,--output", ex.out, "Solution file (default: stdout)");
  exact->add_option("file", ex.file, "Instance file")->required();
  exact->callback([&] { code = RunExact(ex); });

  std::string verify_file, verify_solution;
  auto* verify = app.add_subcommand("verify", "Check a graded solution against an instance");
  verify->add_option("file", verify_file, "Instance file")->required();
  verify->add_option("solution", verify_solution, "Solution file")->required();
  verify->callback([&] { code = RunVerify(verify_file, verify_solution); });

  LpArgs lp;
  auto* emit = app.add_subcommand("emit-lp", "Write the ILP model in LP format");
  emit->add_option("file", lp.file, "Instance file")->required();
  emit->add_option("-o,--output", lp.out, "LP file")->required();
  emit->add_flag("--reduce", lp.reduce, "Apply the size reductions first; writes <output>.fixings");
  emit->add_flag("--pairwise", lp.pairwise, "Pairwise spanner model over the level-1 terminal pairs");
  emit->add_flag("--relax", lp.relax, "Declare arc variables continuous");
  emit->callback([&] { code = RunEmitLp(lp); });

  std::string config_path, out_dir;
  int workers = 0;
  bool quiet = false;
  auto* experiment = app.add_subcommand("experiment", "Run an experiment grid");
  experiment->add_option("config", config_path, "Config file")->required();
  experiment->add_option("-o,--output", out_dir, "Output directory")->required();
  experiment->add_option("--workers", workers, "Override the configured worker count");
  experiment->add_flag("-q,--quiet", quiet, "No progress output");
  experiment->callback([&] { code = RunExperiment(config_path, out_dir, workers, quiet); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Diagnose({{"error", "usage"}, {"message", e.what()}});
    return kUsage;
  } catch (const Failure& f) {
    Diagnose(f.diagnostic);
    return f.code;
  } catch (const ParseError& e) {
    Diagnose({{"error", "parse"}, {"line", e.line()}, {"message", e.detail()}});
    return kInput;
  } catch (const DisconnectedError& e) {
    Diagnose({{"error", "infeasible"}, {"u", e.u()}, {"v", e.v()}, {"message", e.what()}});
    return kInfeasible;
  } catch (const SolverError& e) {
    Diagnose({{"error", "unsolved"}, {"message", e.what()}});
    return kUnsolved;
  } catch (const std::exception& e) {
    // ArgumentError, unreadable files and friends.
    Diagnose({{"error", "input"}, {"message", e.what()}});
    return kInput;
  }
  return code;
}
