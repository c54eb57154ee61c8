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

// stochvc: command-line driver for the stochastic vertex cover experiments.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stochvc/errors.h"
#include "stochvc/experiment.h"

namespace {

using stochvc::ExperimentConfig;

struct GraphArgs {
  std::string generator;
  std::string mode = "auto";
  std::string solver = "exact";
  std::int64_t budget = -1;
};

void add_graph_options(CLI::App* cmd, ExperimentConfig& config,
                       GraphArgs& args) {
  cmd->add_option("--graph", config.graph_path, "Edge-list file");
  cmd->add_option("--generator", args.generator,
                  "Generator spec, e.g. erdos_renyi:n=12,density=0.4");
  cmd->add_option("--p", config.p, "Edge realization probability")
      ->capture_default_str();
  cmd->add_option("--epsilon", config.epsilon, "Accuracy parameter in (0, 1/4)")
      ->capture_default_str();
  cmd->add_option("--estimate-mode", args.mode, "auto | exact | mc")
      ->capture_default_str();
  cmd->add_option("--estimator-trials", config.estimator_trials,
                  "Monte-Carlo trials for c_v and opt")
      ->capture_default_str();
  cmd->add_option("--constant", config.constant,
                  "Constant in gamma and the query budget")
      ->capture_default_str();
}

void finish(ExperimentConfig& config, const GraphArgs& args,
            const std::string& command) {
  config.command = command;
  if (!args.generator.empty()) {
    config.generator = stochvc::parse_generator_spec(args.generator);
  }
  config.estimate_mode = stochvc::parse_mode_request(args.mode);
  config.solver_mode = stochvc::parse_solver_mode(args.solver);
  if (args.budget >= 0) config.budget = static_cast<std::uint64_t>(args.budget);
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      grid.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw stochvc::ParameterError("bad --t-grid value '" + item + "'");
    }
  }
  return grid;
}

std::string out_path(const ExperimentConfig& config, const std::string& file) {
  return (std::filesystem::path(config.out_dir) / file).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic vertex cover in the edge-query model"};
  app.require_subcommand(1);
  app.fallthrough();
  ExperimentConfig config;
  GraphArgs args;
  app.add_option("--seed", config.seed, "Master seed")->capture_default_str();
  app.add_option("--trials", config.trials, "Trials")->capture_default_str();
  app.add_option("--threads", config.threads, "Worker threads")
      ->capture_default_str();
  app.add_option("--out-dir", config.out_dir, "Output directory")
      ->capture_default_str();

  auto* run_vc = app.add_subcommand("run-vc", "Run the vertex cover pipeline");
  add_graph_options(run_vc, config, args);
  run_vc->add_option("--mode", args.solver, "exact | candidates")
      ->capture_default_str();
  run_vc->add_option("--budget", args.budget,
                     "Override the query budget (>= 0)");
  run_vc->add_option("--seed-trials", config.seed_trials,
                     "Trials per Vertex-Seed iteration")
      ->capture_default_str();
  run_vc->add_option("--solver-trials", config.solver_trials,
                     "Trials per candidate expectation")
      ->capture_default_str();

  auto* estimate = app.add_subcommand("estimate-opt", "Estimate opt, c_v, c_e");
  add_graph_options(estimate, config, args);

  auto* trace = app.add_subcommand("seed-trace", "Trace the Vertex-Seed loop");
  add_graph_options(trace, config, args);
  trace->add_option("--seed-trials", config.seed_trials,
                    "Trials per iteration")
      ->capture_default_str();

  std::size_t instances = 1;
  std::size_t step_trials = 2000;
  auto* structural =
      app.add_subcommand("structural-check", "Check the high-forward-degree set");
  add_graph_options(structural, config, args);
  structural->add_option("--instances", instances,
                         "Generated instances (seeds seed, seed+1, ...)")
      ->capture_default_str();
  structural->add_option("--step-trials", step_trials,
                         "Simulations per ordering step")
      ->capture_default_str();

  std::string grid_text;
  auto* concentration =
      app.add_subcommand("concentration", "Empirical tail of |MVC(G*)|");
  add_graph_options(concentration, config, args);
  concentration->add_option("--t-grid", grid_text,
                            "Comma-separated t values (default: 20 points)");

  auto* compare = app.add_subcommand("compare", "Compare baseline strategies");
  add_graph_options(compare, config, args);
  compare->add_option("--mode", args.solver, "exact | candidates")
      ->capture_default_str();
  compare->add_option("--budget", args.budget, "Override the query budget");

  std::string output;
  std::string gen_spec;
  auto* gen = app.add_subcommand("generate", "Write a generated edge list");
  gen->add_option("spec", gen_spec, "Generator spec")->required();
  gen->add_option("-o,--output", output, "Output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const auto g = stochvc::generate(stochvc::parse_generator_spec(gen_spec),
                                       stochvc::SeedSpec{config.seed, 0});
      const std::string text = stochvc::serialize_edge_list(g);
      if (output.empty()) {
        std::cout << text;
      } else {
        stochvc::write_text(output, text);
      }
      return 0;
    }

    auto* active = app.get_subcommands().front();
    finish(config, args, active->get_name());

    if (run_vc->parsed()) {
      const auto report = stochvc::pipeline_run(config);
      std::cout << report.summary.dump(2) << "\n";
      return report.ok ? 0 : 1;
    }
    if (estimate->parsed()) {
      const auto g = stochvc::load_graph(config);
      stochvc::Table table;
      const auto summary = stochvc::estimate_opt_report(config, g, &table);
      stochvc::write_text(out_path(config, "estimate_opt.json"),
                          summary.dump(2) + "\n");
      stochvc::write_text(out_path(config, "estimate_opt.csv"),
                          stochvc::render_csv(table, config.to_json()));
      std::cout << summary.dump(2) << "\n";
      return 0;
    }
    if (trace->parsed()) {
      const auto g = stochvc::load_graph(config);
      std::string text;
      for (const auto& line : stochvc::seed_trace(config, g)) {
        text += line.dump() + "\n";
      }
      stochvc::write_text(out_path(config, "seed_trace.jsonl"), text);
      std::cout << text;
      return 0;
    }
    if (structural->parsed()) {
      std::vector<stochvc::BaseGraph> graphs;
      if (config.generator) {
        for (std::size_t i = 0; i < instances; ++i) {
          graphs.push_back(stochvc::generate(
              *config.generator, stochvc::SeedSpec{config.seed + i, 0}));
        }
      } else {
        graphs.push_back(stochvc::load_graph(config));
      }
      stochvc::validate(config);
      const auto table = stochvc::structural_table(config, graphs, step_trials);
      const std::string csv = stochvc::render_csv(table, config.to_json());
      stochvc::write_text(out_path(config, "structural_check.csv"), csv);
      std::cout << csv;
      bool ok = true;
      for (const auto& row : table.rows) ok = ok && row[9] == "1" && row[10] == "1";
      return ok ? 0 : 1;
    }
    if (concentration->parsed()) {
      const auto g = stochvc::load_graph(config);
      const auto table =
          stochvc::concentration_table(config, g, parse_grid(grid_text));
      const std::string csv = stochvc::render_csv(table, config.to_json());
      stochvc::write_text(out_path(config, "concentration.csv"), csv);
      std::cout << csv;
      return 0;
    }
    if (compare->parsed()) {
      const auto g = stochvc::load_graph(config);
      const auto rows = stochvc::compare_baselines(config, g);
      const std::string csv = stochvc::render_csv(stochvc::baselines_table(rows),
                                                  config.to_json());
      stochvc::write_text(out_path(config, "compare.csv"), csv);
      std::cout << csv;
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "stochvc: %s\n", e.what());
    return 2;
  }
  return 0;
}
