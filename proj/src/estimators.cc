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

#include "stochvc/estimators.h"

#include <bit>
#include <cmath>
#include <optional>
#include <string>

#include "stochvc/errors.h"
#include "stochvc/mvc.h"
#include "stochvc/parallel.h"
#include "stochvc/realization.h"

namespace stochvc {
namespace {

constexpr double kZ95 = 1.959963984540054;
constexpr std::size_t kEnumerationChunk = 4096;

// The graph restricted to vertices that carry an edge, relabeled monotonically
// so that the canonical order of covers is preserved.
struct Compact {
  InducedSubgraph sub;
  std::optional<detail::SmallGraph> small;

  explicit Compact(const BaseGraph& g) {
    VertexSet touched(g.num_vertices());
    for (const auto& e : g.edges()) {
      touched.insert(e.u);
      touched.insert(e.v);
    }
    sub = induced_subgraph(g, touched);
    if (sub.graph.num_vertices() <= 64 && sub.graph.num_edges() <= 64) {
      small.emplace(sub.graph);
    }
  }
};

struct Accumulator {
  double opt = 0.0;
  double opt_sq = 0.0;
  std::vector<double> vertex;
  std::vector<double> edge;
};

// Adds `weight` times the indicators of the canonical cover `cover_mask` of
// the compact graph realization `edge_mask`.
void accumulate(const Compact& c, std::uint64_t cover_mask, double weight,
                Accumulator& acc) {
  const double size = std::popcount(cover_mask);
  acc.opt += weight * size;
  acc.opt_sq += weight * size * size;
  for (std::uint64_t m = cover_mask; m; m &= m - 1) {
    acc.vertex[c.sub.vertex_map[std::countr_zero(m)]] += weight;
  }
  const auto& edges = c.small->edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (((cover_mask >> edges[i].first) | (cover_mask >> edges[i].second)) & 1U) {
      acc.edge[c.sub.edge_map[c.small->edge_map()[i]]] += weight;
    }
  }
}

void accumulate_general(const BaseGraph& g, const VertexSet& cover,
                        Accumulator& acc) {
  const double size = static_cast<double>(cover.size());
  acc.opt += size;
  acc.opt_sq += size * size;
  for (Vertex v : cover) acc.vertex[v] += 1.0;
  const auto edges = g.edges();
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    if (cover.contains(edges[e].u) || cover.contains(edges[e].v)) {
      acc.edge[e] += 1.0;
    }
  }
}

MvcStatistics exact_statistics(const BaseGraph& g, double p, int threads) {
  if (g.num_edges() > kExactEnumerationCap) {
    throw CapacityError("exact mode needs m <= " +
                        std::to_string(kExactEnumerationCap) + ", got m = " +
                        std::to_string(g.num_edges()));
  }
  const Compact c(g);
  const int n_local = c.small->num_vertices();
  const auto weights = realization_weights_by_count(g.num_edges(), p);
  const std::uint64_t total = std::uint64_t{1} << g.num_edges();
  const auto parts = map_chunks(
      total, kEnumerationChunk, threads, [&](std::size_t b, std::size_t e) {
        Accumulator acc{0, 0, std::vector<double>(g.num_vertices()),
                        std::vector<double>(g.num_edges())};
        detail::AdjMasks adj;
        for (std::uint64_t mask = b; mask < e; ++mask) {
          c.small->adjacency(mask, adj);
          const auto cover = detail::canonical_cover_masks(adj, n_local);
          accumulate(c, cover, weights[std::popcount(mask)], acc);
        }
        return acc;
      });
  Accumulator sum{0, 0, std::vector<double>(g.num_vertices()),
                  std::vector<double>(g.num_edges())};
  for (const auto& part : parts) {
    sum.opt += part.opt;
    for (std::size_t v = 0; v < sum.vertex.size(); ++v) sum.vertex[v] += part.vertex[v];
    for (std::size_t e = 0; e < sum.edge.size(); ++e) sum.edge[e] += part.edge[e];
  }
  MvcStatistics out;
  out.opt = {sum.opt, 0.0, 0.0, static_cast<std::size_t>(total),
             EstimateMode::kExact};
  for (double x : sum.vertex) {
    out.vertex.push_back({x, 0.0, 0.0, static_cast<std::size_t>(total),
                          EstimateMode::kExact});
  }
  for (double x : sum.edge) {
    out.edge.push_back({x, 0.0, 0.0, static_cast<std::size_t>(total),
                        EstimateMode::kExact});
  }
  return out;
}

MvcStatistics monte_carlo_statistics(const BaseGraph& g, double p,
                                     const EstimatorConfig& config) {
  if (config.trials == 0) throw ParameterError("trials must be positive");
  const Compact c(g);
  const SeedSpec stream = config.seed.substream(Stream::kRealization);
  const auto parts = map_chunks(
      config.trials, kDefaultChunk, config.threads,
      [&](std::size_t b, std::size_t e) {
        Accumulator acc{0, 0, std::vector<double>(g.num_vertices()),
                        std::vector<double>(g.num_edges())};
        detail::AdjMasks adj;
        for (std::size_t t = b; t < e; ++t) {
          const std::uint64_t trial = config.first_trial + t;
          if (c.small) {
            std::uint64_t mask = 0;
            const auto& emap = c.small->edge_map();
            for (std::size_t i = 0; i < emap.size(); ++i) {
              // Keyed by the original edge index: same G* as
              // sample_realization for this (seed, trial).
              if (draw_bernoulli(stream, trial, c.sub.edge_map[emap[i]], p)) {
                mask |= std::uint64_t{1} << i;
              }
            }
            c.small->adjacency(mask, adj);
            const auto cover =
                detail::canonical_cover_masks(adj, c.small->num_vertices());
            accumulate(c, cover, 1.0, acc);
          } else {
            const auto r = sample_realization(g, p, config.seed, trial);
            accumulate_general(g, mvc_exact(r).cover, acc);
          }
        }
        return acc;
      });
  Accumulator sum{0, 0, std::vector<double>(g.num_vertices()),
                  std::vector<double>(g.num_edges())};
  for (const auto& part : parts) {
    sum.opt += part.opt;
    sum.opt_sq += part.opt_sq;
    for (std::size_t v = 0; v < sum.vertex.size(); ++v) sum.vertex[v] += part.vertex[v];
    for (std::size_t e = 0; e < sum.edge.size(); ++e) sum.edge[e] += part.edge[e];
  }
  MvcStatistics out;
  out.opt = mean_estimate(sum.opt, sum.opt_sq, config.trials);
  for (double x : sum.vertex) {
    out.vertex.push_back(
        bernoulli_estimate(static_cast<std::size_t>(x), config.trials));
  }
  for (double x : sum.edge) {
    out.edge.push_back(
        bernoulli_estimate(static_cast<std::size_t>(x), config.trials));
  }
  return out;
}

}  // namespace

std::string_view to_string(EstimateMode mode) {
  return mode == EstimateMode::kExact ? "exact" : "monte_carlo";
}

ModeRequest parse_mode_request(std::string_view text) {
  if (text == "auto") return ModeRequest::kAuto;
  if (text == "exact") return ModeRequest::kExact;
  if (text == "mc" || text == "monte_carlo") return ModeRequest::kMonteCarlo;
  throw ParameterError("unknown estimation mode '" + std::string(text) + "'");
}

EstimateMode resolve_mode(const BaseGraph& g, const EstimatorConfig& config) {
  switch (config.mode) {
    case ModeRequest::kExact:
      return EstimateMode::kExact;
    case ModeRequest::kMonteCarlo:
      return EstimateMode::kMonteCarlo;
    case ModeRequest::kAuto:
      break;
  }
  return g.num_edges() <= kExactEnumerationCap ? EstimateMode::kExact
                                               : EstimateMode::kMonteCarlo;
}

double hoeffding_half_width(std::size_t trials) {
  return std::sqrt(std::log(2.0 / 0.05) / (2.0 * static_cast<double>(trials)));
}

ProbEstimate mean_estimate(double sum, double sum_sq, std::size_t trials) {
  const double n = static_cast<double>(trials);
  const double mean = sum / n;
  const double var =
      trials > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
  const double se = std::sqrt(var / n);
  // An MC mean cannot resolve differences finer than one trial in N.
  const double half = std::max(kZ95 * se, 1.0 / n);
  return {mean, half, se, trials, EstimateMode::kMonteCarlo};
}

ProbEstimate bernoulli_estimate(std::size_t hits, std::size_t trials) {
  const double n = static_cast<double>(trials);
  const double mean = static_cast<double>(hits) / n;
  const double se = std::sqrt(mean * (1.0 - mean) / n);
  return {mean, hoeffding_half_width(trials), se, trials,
          EstimateMode::kMonteCarlo};
}

MvcStatistics mvc_statistics(const BaseGraph& g, double p,
                             const EstimatorConfig& config) {
  validate_probability(p);
  if (resolve_mode(g, config) == EstimateMode::kExact) {
    return exact_statistics(g, p, config.threads);
  }
  return monte_carlo_statistics(g, p, config);
}

ProbEstimate expected_mvc(const BaseGraph& g, double p,
                          const EstimatorConfig& config) {
  return mvc_statistics(g, p, config).opt;
}

std::vector<ProbEstimate> membership_probs(const BaseGraph& g, double p,
                                           const EstimatorConfig& config) {
  return mvc_statistics(g, p, config).vertex;
}

std::vector<ProbEstimate> edge_cover_probs(const BaseGraph& g, double p,
                                           const EstimatorConfig& config) {
  return mvc_statistics(g, p, config).edge;
}

double exact_expected_mvc_induced(const BaseGraph& g, double p,
                                  const VertexSet& keep) {
  validate_probability(p);
  double total = 0.0;
  for (const auto& comp : nontrivial_components(g, keep)) {
    const auto sub = induced_subgraph(g, comp);
    if (sub.graph.num_edges() > kExactEnumerationCap) {
      throw CapacityError("component with " +
                          std::to_string(sub.graph.num_edges()) +
                          " edges exceeds the exact enumeration cap");
    }
    const detail::SmallGraph small(sub.graph);
    const auto weights = realization_weights_by_count(sub.graph.num_edges(), p);
    const std::uint64_t count = std::uint64_t{1} << sub.graph.num_edges();
    detail::AdjMasks adj;
    double expectation = 0.0;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      small.adjacency(mask, adj);
      expectation += weights[std::popcount(mask)] *
                     detail::mvc_size_masks(adj, small.num_vertices());
    }
    total += expectation;
  }
  return total;
}

}  // namespace stochvc
