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

#include "stochvc/structural.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "stochvc/errors.h"
#include "stochvc/mvc.h"
#include "stochvc/parallel.h"
#include "stochvc/realization.h"
#include "stochvc/vertex_cover.h"

namespace stochvc {
namespace {

constexpr double kThresholdTolerance = 1e-12;
constexpr double kDeviationTolerance = 1e-9;
constexpr std::size_t kNotPlaced = std::numeric_limits<std::size_t>::max();

double binomial_se(double f, std::size_t n) {
  return std::sqrt(f * (1.0 - f) / static_cast<double>(n));
}

// Exact opt when every component is small enough to enumerate.
std::optional<double> componentwise_opt(const BaseGraph& g, double p) {
  try {
    return exact_expected_mvc_induced(g, p, g.all_vertices());
  } catch (const CapacityError&) {
    return std::nullopt;
  }
}

}  // namespace

GreedyOrdering greedy_ordering(const BaseGraph& g, double p,
                               std::size_t trials_per_step,
                               const SeedSpec& seed, int threads) {
  validate_probability(p);
  if (trials_per_step == 0) {
    throw ParameterError("trials_per_step must be positive");
  }
  const std::size_t n = g.num_vertices();
  const SeedSpec edges_stream = seed.substream(Stream::kRealization);
  const SeedSpec match_stream = seed.substream(Stream::kMatching);
  GreedyOrdering out;
  std::vector<std::size_t> position(n, kNotPlaced);

  for (std::size_t step = 0; step < n; ++step) {
    std::vector<double> hits(n, 0.0);
    if (!out.pi.empty()) {
      const auto parts = map_chunks(
          trials_per_step, kDefaultChunk, threads,
          [&](std::size_t b, std::size_t e) {
            std::vector<double> local(n, 0.0);
            std::vector<char> matched(n);
            std::vector<Vertex> options;
            for (std::size_t s = b; s < e; ++s) {
              const std::uint64_t trial = step * trials_per_step + s;
              CounterStream rng(match_stream, trial);
              std::fill(matched.begin(), matched.end(), 0);
              for (std::size_t i = 0; i < out.pi.size(); ++i) {
                const Vertex v = out.pi[i];
                if (matched[v]) continue;
                options.clear();
                for (const auto& inc : g.incident(v)) {
                  const Vertex w = inc.neighbor;
                  if (matched[w]) continue;
                  if (position[w] < i) continue;
                  if (draw_bernoulli(edges_stream, trial, inc.edge, p)) {
                    options.push_back(w);
                  }
                }
                if (options.empty()) continue;
                const Vertex w = options[rng.below(options.size())];
                matched[v] = 1;
                matched[w] = 1;
              }
              for (Vertex v = 0; v < n; ++v) {
                if (matched[v] && position[v] == kNotPlaced) local[v] += 1.0;
              }
            }
            return local;
          });
      for (const auto& part : parts) {
        for (Vertex v = 0; v < n; ++v) hits[v] += part[v];
      }
    }
    std::optional<Vertex> pick;
    for (Vertex v = 0; v < n; ++v) {
      if (position[v] != kNotPlaced) continue;
      if (!pick || hits[v] > hits[*pick]) pick = v;
    }
    position[*pick] = out.pi.size();
    out.pi.push_back(*pick);
    out.matched_prob.push_back(hits[*pick] /
                               static_cast<double>(trials_per_step));
  }
  return out;
}

StructuralSet structural_set(const BaseGraph& g, double p,
                             const GreedyOrdering& ordering) {
  validate_probability(p);
  const std::size_t n = g.num_vertices();
  if (ordering.pi.size() != n) {
    throw ContractError("ordering length does not match the graph");
  }
  std::vector<std::size_t> position(n, kNotPlaced);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = ordering.pi[i];
    if (v >= n || position[v] != kNotPlaced) {
      throw ContractError("ordering is not a permutation");
    }
    position[v] = i;
  }
  StructuralSet out;
  out.s = VertexSet(n);
  out.forward_degrees.assign(n, 0);
  for (const auto& e : g.edges()) {
    ++out.forward_degrees[position[e.u] < position[e.v] ? e.u : e.v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (p * static_cast<double>(out.forward_degrees[v]) >=
        1.0 - kThresholdTolerance) {
      out.s.insert(v);
    }
  }
  return out;
}

StructuralReport verify_structural(const BaseGraph& g, double p,
                                   const StructuralSet& set,
                                   const ProbEstimate& opt) {
  validate_probability(p);
  StructuralReport r;
  r.opt = opt.mean;
  r.opt_margin = opt.half_width;
  const double opt_hi = opt.mean + opt.half_width;
  r.s_size = set.s.size();
  r.size_bound = set.c * opt_hi;
  r.residual_edges = count_induced_edges(g, set.s.complement());
  r.edge_bound = set.c * opt_hi / p;
  r.size_ok = static_cast<double>(r.s_size) <= r.size_bound;
  r.edges_ok = static_cast<double>(r.residual_edges) <= r.edge_bound;
  return r;
}

double freedman_bound(double t, double opt, double c) {
  if (t < 0.0 || opt < 0.0) {
    throw DomainError("freedman_bound needs t >= 0 and opt >= 0");
  }
  if (t == 0.0) return 2.0;
  return 2.0 * std::exp(-t * t / (4.0 * c * opt + 2.0 * t / 3.0));
}

double corollary_bound(double t, double opt) {
  if (t < 0.0 || t > opt) {
    throw DomainError("corollary_bound needs 0 <= t <= opt, got t = " +
                      std::to_string(t) + ", opt = " + std::to_string(opt));
  }
  if (t == 0.0) return 2.0;
  return 2.0 * std::exp(-(t * t / 33.0) / opt);
}

std::vector<double> default_t_grid(double opt) {
  std::vector<double> grid(20);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = 2.0 * opt * static_cast<double>(i) / 19.0;
  }
  return grid;
}

TailReport empirical_tail(const BaseGraph& g, double p, std::size_t trials,
                          std::vector<double> t_grid, const SeedSpec& seed,
                          int threads, std::optional<double> exact_opt) {
  validate_probability(p);
  if (trials == 0) throw ParameterError("trials must be positive");
  const auto z = map_indices(trials, threads, [&](std::size_t t) {
    return mvc_size(sample_realization(g, p, seed, t));
  });
  TailReport report;
  report.sample_size = trials;
  double sum = 0.0;
  for (auto v : z) sum += static_cast<double>(v);
  report.sample_mean = sum / static_cast<double>(trials);
  if (exact_opt) {
    report.opt = *exact_opt;
    report.opt_exact = true;
  } else if (const auto exact = componentwise_opt(g, p)) {
    report.opt = *exact;
    report.opt_exact = true;
  } else {
    report.opt = report.sample_mean;
  }
  if (t_grid.empty()) t_grid = default_t_grid(report.opt);
  for (double t : t_grid) {
    if (t < 0.0) throw DomainError("t-grid values must be non-negative");
    std::size_t count = 0;
    for (auto v : z) {
      if (std::abs(static_cast<double>(v) - report.opt) >=
          t - kDeviationTolerance) {
        ++count;
      }
    }
    TailPoint pt;
    pt.t = t;
    pt.empirical = static_cast<double>(count) / static_cast<double>(trials);
    pt.std_error = binomial_se(pt.empirical, trials);
    pt.freedman = freedman_bound(t, report.opt);
    if (t <= report.opt) pt.corollary = corollary_bound(t, report.opt);
    report.points.push_back(pt);
  }
  return report;
}

GTailReport g_tail_check(const BaseGraph& g, double p, const VertexSet& s,
                         double epsilon, std::size_t trials,
                         const SeedSpec& seed, int threads) {
  validate_probability(p);
  if (!(epsilon > 0.0)) throw ParameterError("epsilon must be positive");
  if (trials == 0) throw ParameterError("trials must be positive");
  if (s.universe() != g.num_vertices()) {
    throw ContractError("S must be a vertex set of the graph");
  }
  GTailReport r;
  r.trials = trials;
  const SeedSpec reference = seed.substream(Stream::kCandidates);
  r.expected_g = expected_objective(g, p, s, trials, reference).mean;
  if (const auto exact = componentwise_opt(g, p)) {
    r.opt = *exact;
  } else {
    EstimatorConfig est;
    est.seed = reference;
    est.trials = trials;
    est.threads = threads;
    r.opt = expected_mvc(g, p, est).mean;
  }
  r.threshold = epsilon * r.expected_g;
  const auto values = map_indices(trials, threads, [&](std::size_t t) {
    return objective_g(s, sample_realization(g, p, seed, t));
  });
  std::size_t count = 0;
  for (auto v : values) {
    if (std::abs(static_cast<double>(v) - r.expected_g) >
        r.threshold + kDeviationTolerance) {
      ++count;
    }
  }
  r.frequency = static_cast<double>(count) / static_cast<double>(trials);
  r.std_error = binomial_se(r.frequency, trials);
  r.bound = 2.0 * std::exp(-epsilon * epsilon * r.opt / 66.0);
  r.ok = r.frequency <= r.bound + 3.0 * r.std_error;
  return r;
}

}  // namespace stochvc
