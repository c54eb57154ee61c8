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

// Estimators for opt = E|MVC(G*)|, c_v = Pr[v in MVC(G*)] and
// c_e = Pr[e covered by MVC(G*)], either exactly by enumerating all 2^m
// realizations or by Monte-Carlo over counter-based trials.

#ifndef STOCHVC_ESTIMATORS_H_
#define STOCHVC_ESTIMATORS_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "stochvc/graph.h"
#include "stochvc/rng.h"

namespace stochvc {

enum class EstimateMode { kExact, kMonteCarlo };
enum class ModeRequest { kAuto, kExact, kMonteCarlo };

std::string_view to_string(EstimateMode mode);
ModeRequest parse_mode_request(std::string_view text);

struct ProbEstimate {
  double mean = 0.0;
  // 95% half-interval; zero exactly when mode is kExact.
  double half_width = 0.0;
  double std_error = 0.0;
  std::size_t trials = 0;
  EstimateMode mode = EstimateMode::kExact;
};

struct EstimatorConfig {
  ModeRequest mode = ModeRequest::kAuto;
  std::size_t trials = 10000;
  SeedSpec seed{};
  int threads = 1;
  // Trials use indices [first_trial, first_trial + trials).
  std::uint64_t first_trial = 0;
};

// Resolves kAuto: exact when m <= kExactEnumerationCap.
EstimateMode resolve_mode(const BaseGraph& g, const EstimatorConfig& config);

struct MvcStatistics {
  ProbEstimate opt;
  std::vector<ProbEstimate> vertex;  // c_v
  std::vector<ProbEstimate> edge;    // c_e
};

// All three quantities from one pass over common realizations. Throws
// CapacityError for exact mode with m > kExactEnumerationCap.
MvcStatistics mvc_statistics(const BaseGraph& g, double p,
                             const EstimatorConfig& config);

ProbEstimate expected_mvc(const BaseGraph& g, double p,
                          const EstimatorConfig& config);
std::vector<ProbEstimate> membership_probs(const BaseGraph& g, double p,
                                           const EstimatorConfig& config);
std::vector<ProbEstimate> edge_cover_probs(const BaseGraph& g, double p,
                                           const EstimatorConfig& config);

// Exact E|MVC(G*[keep])| summed over the connected components of G[keep]
// (realizations of different components are independent). Each component
// must have at most kExactEnumerationCap edges.
double exact_expected_mvc_induced(const BaseGraph& g, double p,
                                  const VertexSet& keep);

// Half-width helpers shared with the harness.
double hoeffding_half_width(std::size_t trials);
ProbEstimate mean_estimate(double sum, double sum_sq, std::size_t trials);
ProbEstimate bernoulli_estimate(std::size_t hits, std::size_t trials);

}  // namespace stochvc

#endif  // STOCHVC_ESTIMATORS_H_
