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

#include "stochvc/experiment.h"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "stochvc/errors.h"
#include "stochvc/mvc.h"

namespace stochvc {
namespace {

using nlohmann::json;

json vertex_list(const VertexSet& s) { return s.to_vector(); }

json estimate_json(const ProbEstimate& e) {
  return {{"mean", e.mean},
          {"half_width", e.half_width},
          {"std_error", e.std_error},
          {"trials", e.trials},
          {"mode", to_string(e.mode)}};
}

std::string count(std::size_t x) { return std::to_string(x); }

struct OptValue {
  ProbEstimate estimate;
  bool exact = false;
};

OptValue compute_opt(const ExperimentConfig& config, const BaseGraph& g) {
  const auto e = expected_mvc(g, config.p, config.estimator());
  return {e, e.mode == EstimateMode::kExact};
}

}  // namespace

json ExperimentConfig::to_json() const {
  json j = {{"command", command},
            {"p", p},
            {"epsilon", epsilon},
            {"seed", seed},
            {"trials", trials},
            {"threads", threads},
            {"solver_mode", std::string(to_string(solver_mode))},
            {"estimate_mode", estimate_mode == ModeRequest::kAuto    ? "auto"
                              : estimate_mode == ModeRequest::kExact ? "exact"
                                                                     : "mc"},
            {"estimator_trials", estimator_trials},
            {"seed_trials", seed_trials},
            {"solver_trials", solver_trials},
            {"constant", constant},
            {"out_dir", out_dir}};
  if (!graph_path.empty()) j["graph"] = graph_path;
  if (generator) j["generator"] = to_string(*generator);
  if (budget) j["budget"] = *budget;
  return j;
}

SeedParams ExperimentConfig::params(std::size_t n) const {
  return SeedParams::scaled(epsilon, p, n, constant);
}

EstimatorConfig ExperimentConfig::estimator() const {
  EstimatorConfig e;
  e.mode = estimate_mode;
  e.trials = estimator_trials;
  e.seed = SeedSpec{seed, 0};
  e.threads = threads;
  return e;
}

SeedConfig ExperimentConfig::seed_config() const {
  SeedConfig s;
  s.mode = estimate_mode;
  s.trials = seed_trials;
  s.seed = SeedSpec{seed, 0};
  s.threads = threads;
  return s;
}

SolverConfig ExperimentConfig::solver() const {
  SolverConfig s;
  s.mode = solver_mode;
  s.trials = solver_trials;
  s.budget_override = budget;
  s.seed = SeedSpec{seed, 0};
  s.threads = threads;
  return s;
}

void validate(const ExperimentConfig& config) {
  validate_probability(config.p);
  validate_epsilon(config.epsilon);
  if (config.graph_path.empty() == !config.generator.has_value()) {
    throw ParameterError("give exactly one of a graph file or a generator");
  }
  if (config.trials == 0 || config.estimator_trials == 0 ||
      config.seed_trials == 0 || config.solver_trials == 0) {
    throw ParameterError("trial counts must be positive");
  }
  if (config.threads < 1) throw ParameterError("threads must be at least 1");
  if (!(config.constant > 0.0)) {
    throw ParameterError("constant must be positive");
  }
}

BaseGraph load_graph(const ExperimentConfig& config) {
  validate(config);
  if (config.generator) {
    return generate(*config.generator, SeedSpec{config.seed, 0});
  }
  std::ifstream in(config.graph_path);
  if (!in) {
    throw Error("cannot open graph file '" + config.graph_path + "'");
  }
  try {
    return parse_edge_list(in);
  } catch (const Error& e) {
    throw Error(config.graph_path + ": " + e.what());
  }
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string render_csv(const Table& table, const json& config) {
  std::string out = "# config: " + config.dump() + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  const std::filesystem::path fp(path);
  if (fp.has_parent_path()) std::filesystem::create_directories(fp.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

PipelineReport run_pipeline(const ExperimentConfig& config, const BaseGraph& g) {
  validate(config);
  const std::size_t n = g.num_vertices();
  const SeedParams params = config.params(n);
  const SolverConfig solver = config.solver();
  const std::uint64_t budget = effective_budget(params, solver);

  const Plan plan = plan_vertex_cover(g, config.p, params, solver,
                                      config.estimator(), config.seed_config());
  const auto runs =
      run_trials(g, config.p, plan.solution.s_hat, budget, config.trials,
                 SeedSpec{config.seed, 0}.substream(Stream::kQueryPhase),
                 config.threads);
  const OptValue opt = compute_opt(config, g);

  PipelineReport report;
  report.trials.columns = {"trial", "queries", "cover_size", "violations"};
  double sum = 0.0, sum_sq = 0.0, queries = 0.0;
  std::size_t violations = 0, over_budget = 0, max_queries = 0;
  const std::size_t residual =
      count_induced_edges(g, plan.solution.s_hat.complement());
  std::size_t non_matching_queries = 0;
  for (std::size_t t = 0; t < runs.size(); ++t) {
    const auto& r = runs[t];
    const double size = static_cast<double>(r.cover.size());
    sum += size;
    sum_sq += size * size;
    queries += static_cast<double>(r.queries_used);
    max_queries = std::max(max_queries, r.queries_used);
    violations += r.realized_edge_violations;
    if (r.queries_used > budget) ++over_budget;
    if (r.queries_used != residual) ++non_matching_queries;
    report.trials.rows.push_back({count(t), count(r.queries_used),
                                  count(r.cover.size()),
                                  count(r.realized_edge_violations)});
  }
  const ProbEstimate cover = mean_estimate(sum, sum_sq, runs.size());

  json checks;
  checks["cover_valid"] = violations == 0;
  checks["budget_respected"] = over_budget == 0;
  checks["non_adaptive_queries"] = non_matching_queries == 0;
  checks["solution_feasible"] = plan.solution.feasible;
  if (plan.inputs && seed_length_bound_applies(params, n)) {
    checks["seed_length"] = static_cast<double>(plan.inputs->q.size()) <=
                            seed_length_bound(params, n);
  }
  const double opt_hi = opt.estimate.mean + 3.0 * opt.estimate.std_error;
  checks["approximation"] = cover.mean <= (1.0 + config.epsilon) * opt_hi +
                                              3.0 * cover.std_error;
  bool ok = true;
  for (const auto& [name, value] : checks.items()) ok = ok && value.get<bool>();

  json summary;
  summary["config"] = config.to_json();
  summary["graph"] = {{"n", n}, {"m", g.num_edges()}};
  summary["params"] = {{"epsilon", params.epsilon},
                       {"delta", params.delta},
                       {"gamma", params.gamma},
                       {"degree_threshold", params.degree_threshold},
                       {"query_budget", budget},
                       {"constant", params.constant}};
  summary["dense_fallback"] = plan.dense_fallback;
  if (plan.inputs) {
    summary["partition"] = {{"L", vertex_list(plan.inputs->partition.L)},
                            {"M", vertex_list(plan.inputs->partition.M)},
                            {"S", vertex_list(plan.inputs->partition.S)}};
    summary["Q"] = plan.inputs->q;
  }
  summary["S_hat"] = vertex_list(plan.solution.s_hat);
  summary["objective"] = estimate_json(plan.solution.objective);
  summary["candidates_evaluated"] = plan.solution.candidates_evaluated;
  summary["opt"] = estimate_json(opt.estimate);
  summary["trials"] = {{"count", runs.size()},
                       {"mean_cover", cover.mean},
                       {"cover_std_error", cover.std_error},
                       {"mean_queries", runs.empty() ? 0.0
                                                     : queries / runs.size()},
                       {"max_queries", max_queries},
                       {"violations", violations}};
  summary["checks"] = checks;
  summary["ok"] = ok;

  report.ok = ok;
  report.summary = std::move(summary);
  report.runs = runs;
  return report;
}

PipelineReport pipeline_run(const ExperimentConfig& config) {
  const BaseGraph g = load_graph(config);
  PipelineReport report = run_pipeline(config, g);
  const std::filesystem::path dir(config.out_dir);
  write_text((dir / "run_vc.json").string(), report.summary.dump(2) + "\n");
  write_text((dir / "run_vc.csv").string(),
             render_csv(report.trials, config.to_json()));
  return report;
}

std::vector<BaselineRow> compare_baselines(const ExperimentConfig& config,
                                           const BaseGraph& g,
                                           double* opt_out) {
  validate(config);
  const std::size_t n = g.num_vertices();
  const SeedParams params = config.params(n);
  const SolverConfig solver = config.solver();
  const std::uint64_t budget = effective_budget(params, solver);
  const auto stats = mvc_statistics(g, config.p, config.estimator());
  const LmsPartition partition = partition_lms(stats.vertex, config.epsilon);
  const Plan plan = plan_vertex_cover(g, config.p, params, solver,
                                      config.estimator(), config.seed_config());
  const double opt = stats.opt.mean;
  if (opt_out != nullptr) *opt_out = opt;

  const std::vector<std::pair<std::string, VertexSet>> strategies = {
      {"query_all", VertexSet(n)},
      {"commit_l", partition.L},
      {"commit_all", VertexSet::all(n)},
      {"algorithm", plan.solution.s_hat},
  };
  const SeedSpec phase = SeedSpec{config.seed, 0}.substream(Stream::kQueryPhase);
  std::vector<BaselineRow> rows;
  for (const auto& [name, s] : strategies) {
    BaselineRow row;
    row.strategy = name;
    row.commit_size = s.size();
    row.feasible = count_induced_edges(g, s.complement()) <= budget;
    if (row.feasible) {
      const auto runs = run_trials(g, config.p, s, budget, config.trials, phase,
                                   config.threads);
      double cover = 0.0, queries = 0.0;
      for (const auto& r : runs) {
        cover += static_cast<double>(r.cover.size());
        queries += static_cast<double>(r.queries_used);
        row.violations += r.realized_edge_violations;
      }
      row.mean_cover = cover / static_cast<double>(runs.size());
      row.mean_queries = queries / static_cast<double>(runs.size());
      if (opt > 0.0) row.ratio = row.mean_cover / opt;
    }
    rows.push_back(row);
  }
  return rows;
}

Table baselines_table(const std::vector<BaselineRow>& rows) {
  Table t;
  t.columns = {"strategy",   "feasible",     "commit_size", "mean_cover",
               "mean_queries", "ratio_to_opt", "violations"};
  for (const auto& r : rows) {
    t.rows.push_back({r.strategy, r.feasible ? "1" : "0", count(r.commit_size),
                      r.feasible ? format_real(r.mean_cover) : "",
                      r.feasible ? format_real(r.mean_queries) : "",
                      r.ratio ? format_real(*r.ratio) : "",
                      count(r.violations)});
  }
  return t;
}

json estimate_opt_report(const ExperimentConfig& config, const BaseGraph& g,
                         Table* table) {
  const auto stats = mvc_statistics(g, config.p, config.estimator());
  if (table != nullptr) {
    table->columns = {"kind", "id", "mean", "half_width"};
    table->rows.push_back({"opt", "0", format_real(stats.opt.mean),
                           format_real(stats.opt.half_width)});
    for (std::size_t v = 0; v < stats.vertex.size(); ++v) {
      table->rows.push_back({"vertex", count(v),
                             format_real(stats.vertex[v].mean),
                             format_real(stats.vertex[v].half_width)});
    }
    for (std::size_t e = 0; e < stats.edge.size(); ++e) {
      table->rows.push_back({"edge", count(e), format_real(stats.edge[e].mean),
                             format_real(stats.edge[e].half_width)});
    }
  }
  json c_v = json::array(), c_e = json::array();
  for (const auto& e : stats.vertex) c_v.push_back(e.mean);
  for (const auto& e : stats.edge) c_e.push_back(e.mean);
  return {{"config", config.to_json()},
          {"graph", {{"n", g.num_vertices()}, {"m", g.num_edges()}}},
          {"opt", estimate_json(stats.opt)},
          {"c_v", c_v},
          {"c_e", c_e}};
}

std::vector<json> seed_trace(const ExperimentConfig& config,
                             const BaseGraph& g) {
  const SeedParams params = config.params(g.num_vertices());
  const auto stats = mvc_statistics(g, config.p, config.estimator());
  const LmsPartition partition = partition_lms(stats.vertex, config.epsilon);
  const auto seq =
      vertex_seed(g, partition.M, config.p, params, config.seed_config());
  std::vector<json> lines;
  for (const auto& step : seq.steps) {
    json line = {{"iteration", step.iteration},
                 {"chosen", step.chosen ? json(*step.chosen) : json(nullptr)},
                 {"estimate", step.best.mean},
                 {"estimate_half_width", step.best.half_width},
                 {"candidates", step.candidates},
                 {"undecided",
                  {{"mean", step.undecided_mean},
                   {"min", step.undecided_min},
                   {"max", step.undecided_max}}}};
    lines.push_back(std::move(line));
  }
  return lines;
}

Table structural_table(const ExperimentConfig& config,
                       const std::vector<BaseGraph>& instances,
                       std::size_t trials_per_step) {
  Table t;
  t.columns = {"instance", "n",         "m",           "opt",
               "opt_exact", "s_size",   "size_bound",  "residual_edges",
               "edge_bound", "size_ok", "edges_ok"};
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& g = instances[i];
    const SeedSpec seed = SeedSpec{config.seed, 0}.substream(100 + i);
    const auto ordering =
        greedy_ordering(g, config.p, trials_per_step, seed, config.threads);
    const auto set = structural_set(g, config.p, ordering);
    const auto opt = expected_mvc(g, config.p, config.estimator());
    const auto r = verify_structural(g, config.p, set, opt);
    t.rows.push_back({count(i), count(g.num_vertices()), count(g.num_edges()),
                      format_real(opt.mean),
                      opt.mode == EstimateMode::kExact ? "1" : "0",
                      count(r.s_size), format_real(r.size_bound),
                      count(r.residual_edges), format_real(r.edge_bound),
                      r.size_ok ? "1" : "0", r.edges_ok ? "1" : "0"});
  }
  return t;
}

Table concentration_table(const ExperimentConfig& config, const BaseGraph& g,
                          const std::vector<double>& t_grid) {
  const auto report = empirical_tail(g, config.p, config.trials, t_grid,
                                     SeedSpec{config.seed, 0}, config.threads);
  Table t;
  t.columns = {"t", "opt", "empirical", "std_error", "freedman", "corollary"};
  for (const auto& pt : report.points) {
    t.rows.push_back({format_real(pt.t), format_real(report.opt),
                      format_real(pt.empirical), format_real(pt.std_error),
                      format_real(pt.freedman),
                      pt.corollary ? format_real(*pt.corollary) : ""});
  }
  return t;
}

}  // namespace stochvc
