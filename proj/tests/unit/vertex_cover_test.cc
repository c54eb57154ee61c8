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

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "stochvc/errors.h"
#include "stochvc/mvc.h"
#include "stochvc/vertex_cover.h"

using namespace stochvc;

namespace {

const BaseGraph tri = BaseGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
const BaseGraph edge = BaseGraph::from_edges(2, {{0, 1}});

SolverConfig with_budget(std::uint64_t budget) {
  SolverConfig c;
  c.budget_override = budget;
  return c;
}

std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

}  // namespace

TEST_CASE("objective g") {
  const Realization full(tri, tri.all_edges());
  CHECK(objective_g(VertexSet::all(3), full) == 3);
  CHECK(objective_g(VertexSet(3), full) == 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::random_graph(8, 0.5, seed);
    const auto r = sample_realization(g, 0.5, SeedSpec{seed, 0});
    const std::size_t opt = mvc_size(r);
    for (std::uint64_t s = 0; s < 256; s += 7) {
      CHECK(objective_g(VertexSet::from_mask(8, s), r) >= opt);
    }
  }
}

TEST_CASE("commit set on small graphs") {
  const auto params = SeedParams::make(0.1, 0.5, 2);
  const auto a = solve_problem_1(edge, 0.5, params, SolverConfig{});
  CHECK(a.s_hat.empty());
  CHECK(a.objective.mean == doctest::Approx(0.5));
  CHECK(a.feasible);

  const auto b = solve_problem_1(tri, 1.0, SeedParams::make(0.1, 1.0, 3),
                                 with_budget(0));
  CHECK(b.s_hat == VertexSet(3, {0, 1}));
  CHECK(b.objective.mean == doctest::Approx(2.0));
  CHECK(b.residual_edges == 0);
}

TEST_CASE("exact solver matches a full scan") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 4 + seed % 6;
    const auto g = oracle::random_graph(n, 0.5, seed + 300);
    if (g.num_edges() > 16) continue;
    const double p = 0.25 + 0.02 * static_cast<double>(seed);
    const std::uint64_t budget = seed % 4;
    const auto params = SeedParams::make(0.1, p, n);
    const auto sol = solve_problem_1(g, p, params, with_budget(budget));
    const auto all = oracle::all_objectives(g, p);

    double best = 1e300;
    for (std::uint64_t s = 0; s < all.size(); ++s) {
      const auto set = VertexSet::from_mask(n, s);
      if (count_induced_edges(g, set.complement()) <= budget) {
        best = std::min(best, all[s]);
      }
    }
    std::optional<VertexSet> first;
    for (std::uint64_t s = 0; s < all.size(); ++s) {
      const auto set = VertexSet::from_mask(n, s);
      if (count_induced_edges(g, set.complement()) > budget) continue;
      if (all[s] > best + 1e-10) continue;
      if (!first || canonical_less(set, *first)) first = set;
    }
    CHECK(sol.feasible);
    CHECK(sol.objective.mean == doctest::Approx(best).epsilon(1e-10));
    CHECK(all[mask_of(sol.s_hat)] == doctest::Approx(best).epsilon(1e-10));
    CHECK(sol.s_hat == *first);
  }
}

TEST_CASE("forced vertices in the commit set") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const std::size_t n = 6 + seed % 3;
    const auto g = oracle::random_graph(n, 0.5, seed + 50);
    const double p = 0.4;
    const auto params = SeedParams::make(0.1, p, n);
    const auto cfg = with_budget(2);
    const auto one = solve_problem_1(g, p, params, cfg);
    const auto same = solve_problem_3(g, p, params, VertexSet(n), cfg);
    CHECK(same.s_hat == one.s_hat);
    CHECK(same.objective.mean == one.objective.mean);
    CHECK(solve_problem_3(g, p, params, VertexSet::all(n), cfg).s_hat ==
          VertexSet::all(n));
    const VertexSet q(n, {static_cast<Vertex>(seed % n)});
    const auto three = solve_problem_3(g, p, params, q, cfg);
    CHECK(q.is_subset_of(three.s_hat));
    CHECK(three.objective.mean >= one.objective.mean - 1e-12);
  }
}

TEST_CASE("candidate family returns a feasible set") {
  const auto g = oracle::random_graph(24, 0.3, 11);
  const double p = 0.5;
  const auto params = SeedParams::scaled(0.2, p, 24, 0.05);
  SolverConfig cfg = with_budget(20);
  cfg.mode = SolverMode::kCandidateFamily;
  cfg.trials = 300;
  cfg.seed = SeedSpec{3, 0};
  const auto a = solve_problem_1(g, p, params, cfg);
  CHECK(a.feasible);
  CHECK(a.residual_edges <= 20);
  CHECK(count_induced_edges(g, a.s_hat.complement()) == a.residual_edges);
  CHECK(a.candidates_evaluated >= 2);
  cfg.threads = 4;
  const auto b = solve_problem_1(g, p, params, cfg);
  CHECK(a.s_hat == b.s_hat);
  CHECK(a.objective.mean == b.objective.mean);
}

TEST_CASE("query phase") {
  const auto params = SeedParams::make(0.1, 1.0, 3);
  {
    Realization r(tri, tri.all_edges());
    QueryOracle o(r, tri.all_edges(), params.query_budget);
    const auto res = run_vertex_cover(tri, VertexSet(3), o);
    CHECK(res.queries_used == 3);
    CHECK(res.cover == VertexSet(3, {0, 1}));
    CHECK(res.realized_edge_violations == 0);
  }
  {
    Realization r(tri, tri.all_edges());
    QueryOracle o(r, tri.empty_edge_set(), params.query_budget);
    const auto res = run_vertex_cover(tri, VertexSet::all(3), o);
    CHECK(res.queries_used == 0);
    CHECK(res.cover == VertexSet::all(3));
  }
  {
    Realization r(tri, tri.all_edges());
    QueryOracle o(r, tri.all_edges(), 2);
    CHECK_THROWS_AS(run_vertex_cover(tri, VertexSet(3), o), BudgetError);
  }
}

TEST_CASE("covers are valid in every trial") {
  const auto g = oracle::random_graph(12, 0.35, 77);
  const double p = 0.5;
  const auto params = SeedParams::make(0.1, p, 12);
  const auto sol = solve_problem_1(g, p, params, with_budget(12));
  const auto allowed = induced_edge_set(g, sol.s_hat.complement());
  for (std::uint64_t t = 0; t < 500; ++t) {
    const auto r = sample_realization(g, p, SeedSpec{12, 0}, t);
    QueryOracle o(r, allowed, 12);
    const auto res = run_vertex_cover(g, sol.s_hat, o);
    REQUIRE(is_vertex_cover(g, r.present(), res.cover));
    CHECK(res.realized_edge_violations == 0);
    CHECK(res.queries_used == allowed.size());
    CHECK(res.queries_used <= 12);
    // Canonical cover of the revealed part, on the residual graph alone.
    const auto sub = induced_subgraph(g, sol.s_hat.complement());
    EdgeSet revealed(sub.graph.num_edges());
    for (EdgeIndex i = 0; i < sub.edge_map.size(); ++i) {
      if (r.has(sub.edge_map[i])) revealed.insert(i);
    }
    VertexSet rest(12);
    for (Vertex v : oracle::canonical_cover(sub.graph, revealed)) {
      rest.insert(sub.vertex_map[v]);
    }
    CHECK(res.cover == (sol.s_hat | rest));
  }
  const auto runs = run_trials(g, p, sol.s_hat, 12, 500, SeedSpec{1, 0}, 4);
  for (const auto& res : runs) {
    CHECK(res.realized_edge_violations == 0);
    CHECK(res.queries_used <= res.budget);
  }
}

TEST_CASE("dense fallback boundary") {
  const auto params = SeedParams::make(0.2, 0.9, 6);
  CHECK(dense_fallback_check(BaseGraph::from_edges(6, {}), params));
  CHECK(dense_fallback_check(oracle::random_graph(6, 0.5, 1), params));

  // Boundary: a graph with exactly budget edges, then budget + 1.
  auto tiny = SeedParams::make(0.2, 0.9, 6);
  const auto g = oracle::random_graph(6, 0.6, 2);
  tiny.query_budget = g.num_edges();
  CHECK(dense_fallback_check(g, tiny));
  tiny.query_budget = g.num_edges() - 1;
  CHECK_FALSE(dense_fallback_check(g, tiny));
}

TEST_CASE("solver mode parsing") {
  CHECK(parse_solver_mode("exact") == SolverMode::kExactEnumeration);
  CHECK(parse_solver_mode("candidates") == SolverMode::kCandidateFamily);
  CHECK_THROWS_AS(parse_solver_mode("greedy"), ParameterError);
}
