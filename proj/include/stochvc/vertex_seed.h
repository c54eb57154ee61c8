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

// The L/M/S partition by cover-membership probability, the
// DECIDED/UNDECIDED/PROBLEMATIC sets over M, the greedy Vertex-Seed loop
// that produces Q, and the commit sets SEED(Q_VC, F*).

#ifndef STOCHVC_VERTEX_SEED_H_
#define STOCHVC_VERTEX_SEED_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stochvc/estimators.h"
#include "stochvc/graph.h"
#include "stochvc/realization.h"
#include "stochvc/rng.h"

namespace stochvc {

// Default constant in gamma = eps^5 / constant and in the query budget.
inline constexpr double kPaperConstant = 1000.0;

struct SeedParams {
  double epsilon = 0.0;
  double delta = 0.0;             // eps^2
  double gamma = 0.0;             // eps^5 / constant
  double degree_threshold = 0.0;  // 1 / (p * gamma)
  std::uint64_t query_budget = 0;  // ceil(2 * constant * n / (eps^5 * p))
  double constant = kPaperConstant;

  // Throws ParameterError unless 0 < eps < 1/4 and 0 < p <= 1.
  static SeedParams make(double epsilon, double p, std::size_t n);

  // Same formulas with `constant` in place of 1000. Small constants bring the
  // degree threshold and budget down to sizes where the machinery is
  // exercised on small graphs.
  static SeedParams scaled(double epsilon, double p, std::size_t n,
                           double constant);
};

void validate_epsilon(double epsilon);

// (10 * gamma / delta) * n.
double seed_length_bound(const SeedParams& params, std::size_t n);

// Whether n >= 4 ln(2 / delta), the size condition for seed_length_bound.
bool seed_length_bound_applies(const SeedParams& params, std::size_t n);

struct LmsPartition {
  VertexSet L;
  VertexSet M;
  VertexSet S;
  double lower = 0.0;  // eps; c_v <= lower goes to S
  double upper = 0.0;  // 1 - 2 eps; c_v >= upper goes to L
};

LmsPartition partition_lms(std::span<const double> c, double epsilon);
LmsPartition partition_lms(std::span<const ProbEstimate> c, double epsilon);

// All set operations below take the full realization of G and look only at
// its edges inside M. `q` must be a subset of M and `vc` must cover every
// realized edge of G*[M]; violations throw ContractError.

// {v in M \ Q : v has a realized neighbor in Q \ vc}.
VertexSet decided(const BaseGraph& g, const VertexSet& m, const VertexSet& q,
                  const Realization& r, const VertexSet& vc);

// (M \ Q) \ DECIDED.
VertexSet undecided(const BaseGraph& g, const VertexSet& m, const VertexSet& q,
                    const Realization& r, const VertexSet& vc);

// {v in M \ Q : v not in vc, |N_G[M](v) ∩ UNDECIDED| >= degree_threshold}.
VertexSet problematic(const BaseGraph& g, const VertexSet& m,
                      const VertexSet& q, const Realization& r,
                      const VertexSet& vc, const SeedParams& params);

// As problematic, without the condition v not in vc.
VertexSet set_a(const BaseGraph& g, const VertexSet& m, const VertexSet& q,
                const Realization& r, const VertexSet& vc,
                const SeedParams& params);

struct SeedConfig {
  ModeRequest mode = ModeRequest::kAuto;
  std::size_t trials = 4000;
  SeedSpec seed{};
  int threads = 1;
};

struct SeedStep {
  std::size_t iteration = 0;
  std::optional<Vertex> chosen;
  // Best estimate of Pr[v in PROBLEMATIC(Q, G*[M])] this iteration, or 0
  // when no vertex of M \ Q can reach the degree threshold.
  ProbEstimate best;
  std::size_t candidates = 0;
  double undecided_mean = 0.0;
  std::size_t undecided_min = 0;
  std::size_t undecided_max = 0;
};

struct SeedSequence {
  std::vector<Vertex> q;
  std::vector<SeedStep> steps;

  VertexSet as_set(std::size_t n) const;
};

// Appends the vertex of M \ Q with the highest estimated probability of being
// PROBLEMATIC (ties to the lowest id) while that estimate is at least delta.
// vc = MVC(G*) ∩ M with MVC taken over the full realization. Each iteration
// uses fresh realizations. Exact mode enumerates all 2^m realizations.
SeedSequence vertex_seed(const BaseGraph& g, const VertexSet& m, double p,
                         const SeedParams& params, const SeedConfig& config);

struct SeedSet {
  VertexSet l_part;
  VertexSet q_part;
  VertexSet decided_part;
  VertexSet a_part;
  VertexSet all;  // union of the four parts
  std::size_t residual_edges = 0;  // |E(G[V \ all])|
  bool within_budget = false;      // residual_edges <= query_budget
};

// SEED(Q_VC, F*) = L ∪ Q ∪ DECIDED(Q_VC, F*) ∪ A(Q_VC, F*). F* must be fixed
// on exactly the base edges with an endpoint in Q, and Q_VC must be a subset
// of Q; otherwise ContractError.
SeedSet seed_set(const BaseGraph& g, const LmsPartition& partition,
                 std::span<const Vertex> q, const VertexSet& q_vc,
                 const PartialRealization& f_star, const SeedParams& params);

// SEED(G*) = SEED(Q ∩ MVC(G*), F*) with F* read off G*.
SeedSet seed_of_realization(const BaseGraph& g, const Realization& r,
                            const LmsPartition& partition,
                            std::span<const Vertex> q,
                            const SeedParams& params);

}  // namespace stochvc

#endif  // STOCHVC_VERTEX_SEED_H_
