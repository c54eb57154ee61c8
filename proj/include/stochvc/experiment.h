// Copyright 2026 The stochvc Authors.
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

// Experiment driver shared by the command-line tool and the acceptance
// suite. Every table written to disk starts with a "# config: {...}" line
// holding the full configuration.

#ifndef STOCHVC_EXPERIMENT_H_
#define STOCHVC_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stochvc/estimators.h"
#include "stochvc/generators.h"
#include "stochvc/graph.h"
#include "stochvc/structural.h"
#include "stochvc/vertex_cover.h"
#include "stochvc/vertex_seed.h"

namespace stochvc {

struct ExperimentConfig {
  std::string command = "run-vc";
  std::string graph_path;
  std::optional<GeneratorSpec> generator;
  double p = 0.5;
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  int threads = 1;
  SolverMode solver_mode = SolverMode::kExactEnumeration;
  ModeRequest estimate_mode = ModeRequest::kAuto;
  std::size_t estimator_trials = 10000;
  std::size_t seed_trials = 4000;
  std::size_t solver_trials = 2000;
  double constant = kPaperConstant;
  std::optional<std::uint64_t> budget;
  std::string out_dir = ".";

  nlohmann::json to_json() const;

  SeedParams params(std::size_t n) const;
  EstimatorConfig estimator() const;
  SeedConfig seed_config() const;
  SolverConfig solver() const;
};

// Throws ParameterError on out-of-range values or when the graph source is
// missing or ambiguous.
void validate(const ExperimentConfig& config);

// Reads graph_path or runs the generator. A missing file is reported by path.
BaseGraph load_graph(const ExperimentConfig& config);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Shortest round-trip decimal form; identical inputs give identical text.
std::string format_real(double x);

std::string render_csv(const Table& table, const nlohmann::json& config);
void write_text(const std::string& path, const std::string& text);

struct PipelineReport {
  bool ok = false;
  nlohmann::json summary;
  Table trials;
  std::vector<RunResult> runs;
};

// Plan, query-phase trials and invariant checks. `ok` is true iff every
// check passed.
PipelineReport run_pipeline(const ExperimentConfig& config, const BaseGraph& g);

// run_pipeline on load_graph(config), writing <out_dir>/run_vc.json and
// <out_dir>/run_vc.csv.
PipelineReport pipeline_run(const ExperimentConfig& config);

struct BaselineRow {
  std::string strategy;
  bool feasible = false;
  std::size_t commit_size = 0;
  double mean_cover = 0.0;
  double mean_queries = 0.0;
  std::optional<double> ratio;
  std::size_t violations = 0;
};

// query_all (S = empty), commit_l (S = L), commit_all (S = V) and the
// algorithm's own S, all run on the same realizations. Infeasible strategies
// are reported but not run.
std::vector<BaselineRow> compare_baselines(const ExperimentConfig& config,
                                           const BaseGraph& g,
                                           double* opt_out = nullptr);
Table baselines_table(const std::vector<BaselineRow>& rows);

// estimate-opt: summary plus one row per vertex and per edge.
nlohmann::json estimate_opt_report(const ExperimentConfig& config,
                                   const BaseGraph& g, Table* table);

// seed-trace: one JSON object per Vertex-Seed iteration.
std::vector<nlohmann::json> seed_trace(const ExperimentConfig& config,
                                       const BaseGraph& g);

// structural-check: one row per instance.
Table structural_table(const ExperimentConfig& config,
                       const std::vector<BaseGraph>& instances,
                       std::size_t trials_per_step);

// concentration: one row per t-grid point.
Table concentration_table(const ExperimentConfig& config, const BaseGraph& g,
                          const std::vector<double>& t_grid);

}  // namespace stochvc

#endif  // STOCHVC_EXPERIMENT_H_
