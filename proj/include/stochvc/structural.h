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

// Greedy matching order, forward degrees and the high-forward-degree set S,
// plus empirical tails of |MVC(G*)| and g(S) against the Bernstein-type
// bounds.

#ifndef STOCHVC_STRUCTURAL_H_
#define STOCHVC_STRUCTURAL_H_

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "stochvc/estimators.h"
#include "stochvc/graph.h"
#include "stochvc/rng.h"

namespace stochvc {

// 2 (e / (e - 1) + 2).
inline constexpr double kStructuralConstant =
    2.0 * (std::numbers::e / (std::numbers::e - 1.0) + 2.0);

struct GreedyOrdering {
  std::vector<Vertex> pi;
  // matched_prob[i]: estimated p(pi[i] | pi[0..i)) when pi[i] was selected.
  std::vector<double> matched_prob;
};

// p(v | P) is the probability that v ends up matched when, on a fresh G*,
// each still-unmatched P[i] in turn is matched to a uniformly random
// realized, unmatched neighbor outside P[0..i). Each step estimates it for
// every v outside P from `trials_per_step` simulations and appends the
// argmax (ties to the lowest id).
GreedyOrdering greedy_ordering(const BaseGraph& g, double p,
                               std::size_t trials_per_step,
                               const SeedSpec& seed, int threads = 1);

struct StructuralSet {
  VertexSet s;
  std::vector<std::size_t> forward_degrees;  // by vertex id
  double c = kStructuralConstant;
};

// delta+(u) = neighbors of u after u in pi; S = {u : p delta+(u) >= 1}.
StructuralSet structural_set(const BaseGraph& g, double p,
                             const GreedyOrdering& ordering);

struct StructuralReport {
  std::size_t s_size = 0;
  double size_bound = 0.0;   // c * opt
  std::size_t residual_edges = 0;
  double edge_bound = 0.0;   // C * opt / p
  bool size_ok = false;
  bool edges_ok = false;
  double opt = 0.0;
  double opt_margin = 0.0;
};

// Both inequalities, with opt raised by its half-width when it is estimated.
StructuralReport verify_structural(const BaseGraph& g, double p,
                                   const StructuralSet& set,
                                   const ProbEstimate& opt);

double freedman_bound(double t, double opt, double c = kStructuralConstant);

// 2 exp(-(t^2 / 33) / opt); DomainError when t > opt or t < 0.
double corollary_bound(double t, double opt);

struct TailPoint {
  double t = 0.0;
  double empirical = 0.0;  // Pr[|Z - opt| >= t]
  double std_error = 0.0;
  double freedman = 0.0;
  std::optional<double> corollary;  // only for t <= opt
};

struct TailReport {
  double opt = 0.0;          // centre used for the deviations
  bool opt_exact = false;
  double sample_mean = 0.0;
  std::size_t sample_size = 0;
  std::vector<TailPoint> points;
};

// Twenty evenly spaced points in [0, 2 opt].
std::vector<double> default_t_grid(double opt);

// Samples Z = |MVC(G*)|. The centre is `exact_opt` when given, the exact
// expectation when m <= kExactEnumerationCap, and the sample mean otherwise.
// An empty grid means default_t_grid.
TailReport empirical_tail(const BaseGraph& g, double p, std::size_t trials,
                          std::vector<double> t_grid, const SeedSpec& seed,
                          int threads = 1,
                          std::optional<double> exact_opt = std::nullopt);

struct GTailReport {
  double expected_g = 0.0;
  double threshold = 0.0;  // eps * E[g(S)]
  double frequency = 0.0;  // Pr[|g(S) - E g(S)| > threshold]
  double std_error = 0.0;
  double opt = 0.0;
  double bound = 0.0;      // 2 exp(-eps^2 opt / 66)
  std::size_t trials = 0;
  bool ok = false;         // frequency <= bound + 3 std_error
};

GTailReport g_tail_check(const BaseGraph& g, double p, const VertexSet& s,
                         double epsilon, std::size_t trials,
                         const SeedSpec& seed, int threads = 1);

}  // namespace stochvc

#endif  // STOCHVC_STRUCTURAL_H_
