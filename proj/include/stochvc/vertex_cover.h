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

// The non-adaptive vertex cover algorithm: pick a commit set S by minimizing
// E[g(S)] = |S| + E|MVC(G*[V \ S])| subject to G[V \ S] being sparse, query
// every edge of G[V \ S], and return S ∪ MVC(revealed G*[V \ S]).

#ifndef STOCHVC_VERTEX_COVER_H_
#define STOCHVC_VERTEX_COVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stochvc/estimators.h"
#include "stochvc/graph.h"
#include "stochvc/realization.h"
#include "stochvc/rng.h"
#include "stochvc/vertex_seed.h"

namespace stochvc {

// g(S) = |S| + |MVC(G*[V \ S])|.
std::size_t objective_g(const VertexSet& s, const Realization& r);

enum class SolverMode { kExactEnumeration, kCandidateFamily };

std::string_view to_string(SolverMode mode);
SolverMode parse_solver_mode(std::string_view text);

struct SolverConfig {
  SolverMode mode = SolverMode::kExactEnumeration;
  // Monte-Carlo trials per candidate when an expectation cannot be enumerated.
  std::size_t trials = 2000;
  // Largest n for kExactEnumeration.
  std::size_t enumeration_cap = kExactEnumerationCap;
  // Replaces params.query_budget in the sparsity constraint.
  std::optional<std::uint64_t> budget_override;
  // Realizations that supply F* for SEED candidates.
  std::size_t fixed_samples = 8;
  // Largest |Q| whose subsets Q_VC are all enumerated.
  std::size_t max_enumerated_q = 12;
  SeedSpec seed{};
  int threads = 1;
};

std::uint64_t effective_budget(const SeedParams& params,
                               const SolverConfig& config);

// E[g(S)]. Components of G[V \ S] with at most kExactEnumerationCap edges are
// enumerated; larger ones use `trials` common-random-number realizations.
ProbEstimate expected_objective(const BaseGraph& g, double p,
                                const VertexSet& s, std::size_t trials,
                                const SeedSpec& seed);

struct Solution {
  VertexSet s_hat;
  ProbEstimate objective;
  bool feasible = false;
  std::size_t residual_edges = 0;  // |E(G[V \ s_hat])|
  std::size_t candidates_evaluated = 0;
};

// Inputs that define the candidate family.
struct CandidateInputs {
  LmsPartition partition;
  std::vector<Vertex> q;
};

// c_v by `estimator`, the L/M/S partition, and Vertex-Seed over M.
CandidateInputs build_candidate_inputs(const BaseGraph& g, double p,
                                       const SeedParams& params,
                                       const EstimatorConfig& estimator,
                                       const SeedConfig& seed_config);

// Minimizes E[g(S)] subject to |E(G[V \ S])| <= budget. Ties go to the
// canonically smallest S. Candidate mode builds its inputs from `inputs` or,
// when null, from build_candidate_inputs with default settings.
Solution solve_problem_1(const BaseGraph& g, double p, const SeedParams& params,
                         const SolverConfig& config,
                         const CandidateInputs* inputs = nullptr);

// solve_problem_1 with the extra constraint q ⊆ S.
Solution solve_problem_3(const BaseGraph& g, double p, const SeedParams& params,
                         const VertexSet& q, const SolverConfig& config,
                         const CandidateInputs* inputs = nullptr);

struct RunResult {
  VertexSet cover;
  std::size_t queries_used = 0;
  std::size_t budget = 0;
  std::size_t realized_edge_violations = 0;
};

// Queries every edge of G[V \ s_hat] through `oracle` and returns
// s_hat ∪ MVC(revealed). The oracle must allow exactly those edges.
RunResult run_vertex_cover(const BaseGraph& g, const VertexSet& s_hat,
                           QueryOracle& oracle);

// m <= query_budget: query everything and solve exactly.
bool dense_fallback_check(const BaseGraph& g, const SeedParams& params);

struct Plan {
  bool dense_fallback = false;
  std::optional<CandidateInputs> inputs;
  Solution solution;
};

// dense_fallback_check first; otherwise c_v, partition, Vertex-Seed, and
// solve_problem_3 with the resulting Q.
Plan plan_vertex_cover(const BaseGraph& g, double p, const SeedParams& params,
                       const SolverConfig& solver,
                       const EstimatorConfig& estimator,
                       const SeedConfig& seed_config);

// One query phase per trial against G* = sample_realization(g, p, seed, t).
std::vector<RunResult> run_trials(const BaseGraph& g, double p,
                                  const VertexSet& s_hat, std::uint64_t budget,
                                  std::size_t trials, const SeedSpec& seed,
                                  int threads);

}  // namespace stochvc

#endif  // STOCHVC_VERTEX_COVER_H_
