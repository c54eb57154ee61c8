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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "stochvc/errors.h"
#include "stochvc/experiment.h"

using namespace stochvc;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("stochvc_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig clique_config(std::size_t n) {
  ExperimentConfig c;
  c.generator = GeneratorSpec::clique(n);
  c.p = 1.0;
  c.trials = 50;
  return c;
}

}  // namespace

TEST_CASE("p = 1 clique gives ratio 1") {
  auto config = clique_config(4);
  const auto g = load_graph(config);
  const auto report = run_pipeline(config, g);
  CHECK(report.ok);
  CHECK(report.summary["opt"]["mean"].get<double>() == 3.0);
  CHECK(report.summary["trials"]["mean_cover"].get<double>() == 3.0);
  CHECK(report.summary["trials"]["violations"].get<std::size_t>() == 0);
  CHECK(report.runs.size() == 50);

  double opt = 0.0;
  const auto rows = compare_baselines(config, g, &opt);
  CHECK(opt == 3.0);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].strategy == "query_all");
  REQUIRE(rows[0].ratio);
  CHECK(*rows[0].ratio == 1.0);
  CHECK(rows[2].strategy == "commit_all");
  CHECK(rows[2].mean_queries == 0.0);
  CHECK(*rows[2].ratio == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("outputs carry the config") {
  auto config = clique_config(3);
  const auto dir = scratch("pipeline");
  config.out_dir = dir.string();
  pipeline_run(config);
  const std::string csv = slurp(dir / "run_vc.csv");
  CHECK(csv.rfind("# config: ", 0) == 0);
  const auto header_end = csv.find('\n');
  const auto cfg = nlohmann::json::parse(csv.substr(10, header_end - 10));
  CHECK(cfg == config.to_json());
  CHECK(csv.substr(header_end + 1, 33) == "trial,queries,cover_size,violatio");
  const auto summary = nlohmann::json::parse(slurp(dir / "run_vc.json"));
  CHECK(summary["ok"].get<bool>());

  pipeline_run(config);
  CHECK(slurp(dir / "run_vc.csv") == csv);
  std::filesystem::remove_all(dir);
}

TEST_CASE("missing graph file names the path") {
  ExperimentConfig config;
  config.graph_path = "/nonexistent/graph.txt";
  try {
    load_graph(config);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/graph.txt") != std::string::npos);
  }
}

TEST_CASE("config validation") {
  ExperimentConfig c;
  CHECK_THROWS_AS(validate(c), ParameterError);
  c.generator = GeneratorSpec::star(3);
  CHECK_NOTHROW(validate(c));
  c.graph_path = "x";
  CHECK_THROWS_AS(validate(c), ParameterError);
  c.graph_path.clear();
  c.epsilon = 0.3;
  CHECK_THROWS_AS(validate(c), ParameterError);
  c.epsilon = 0.1;
  c.threads = 0;
  CHECK_THROWS_AS(validate(c), ParameterError);
}

TEST_CASE("real formatting round trips") {
  for (double x : {0.1, 1.0 / 3.0, 15.0, 1e-300, 0.0}) {
    CHECK(std::stod(format_real(x)) == x);
  }
  CHECK(format_real(15.0) == "15");
}

TEST_CASE("csv rendering") {
  Table t;
  t.columns = {"a", "b"};
  t.rows = {{"1", "2"}, {"3", "4"}};
  CHECK(render_csv(t, nlohmann::json{{"k", 1}}) ==
        "# config: {\"k\":1}\na,b\n1,2\n3,4\n");
}

TEST_CASE("concentration and structural tables") {
  ExperimentConfig c;
  c.generator = GeneratorSpec::disjoint_edges(10);
  c.trials = 2000;
  const auto g = load_graph(c);
  const auto t = concentration_table(c, g, {0.0, 2.0, 4.0});
  CHECK(t.columns.size() == 6);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0][2] == "1");
  const auto s = structural_table(c, {g}, 200);
  REQUIRE(s.rows.size() == 1);
  CHECK(s.rows[0][9] == "1");
  CHECK(s.rows[0][10] == "1");
}
