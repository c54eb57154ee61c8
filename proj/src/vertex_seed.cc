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

#include "stochvc/vertex_seed.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stochvc/errors.h"
#include "stochvc/mvc.h"
#include "stochvc/parallel.h"

namespace stochvc {
namespace {

void check_subset(const VertexSet& inner, const VertexSet& outer,
                  const char* what) {
  if (inner.universe() != outer.universe() || !inner.is_subset_of(outer)) {
    throw ContractError(what);
  }
}

void check_inputs(const BaseGraph& g, const VertexSet& m, const VertexSet& q,
                  const Realization& r, const VertexSet& vc) {
  if (m.universe() != g.num_vertices() || vc.universe() != g.num_vertices()) {
    throw ContractError("vertex set universe does not match the graph");
  }
  check_subset(q, m, "Q must be a subset of M");
  const auto edges = g.edges();
  for (EdgeIndex e : r.present()) {
    const auto [u, v] = edges[e];
    if (m.contains(u) && m.contains(v) && !vc.contains(u) && !vc.contains(v)) {
      throw ContractError("vc leaves realized edge (" + std::to_string(u) +
                          "," + std::to_string(v) + ") of G*[M] uncovered");
    }
  }
}

VertexSet decided_unchecked(const BaseGraph& g, const VertexSet& m,
                            const VertexSet& q, const Realization& r,
                            const VertexSet& vc) {
  VertexSet out(g.num_vertices());
  const VertexSet sources = q - vc;
  if (sources.empty()) return out;
  for (Vertex s : sources) {
    for (const auto& inc : g.incident(s)) {
      if (r.has(inc.edge) && m.contains(inc.neighbor) &&
          !q.contains(inc.neighbor)) {
        out.insert(inc.neighbor);
      }
    }
  }
  return out;
}

// {v in M \ Q : |N_G[M](v) ∩ undecided| >= threshold}, optionally excluding vc.
VertexSet threshold_set(const BaseGraph& g, const VertexSet& m,
                        const VertexSet& q, const VertexSet& undecided_set,
                        const VertexSet* vc, double threshold) {
  VertexSet out(g.num_vertices());
  for (Vertex v : m - q) {
    if (vc != nullptr && vc->contains(v)) continue;
    if (static_cast<double>(g.degree(v)) < threshold) continue;
    std::size_t count = 0;
    for (const auto& inc : g.incident(v)) {
      if (undecided_set.contains(inc.neighbor)) ++count;
    }
    if (static_cast<double>(count) >= threshold) out.insert(v);
  }
  return out;
}

std::uint64_t saturating_ceil(double x) {
  if (!(x < 1.8e19)) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ceil(x));
}

}  // namespace

void validate_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.25)) {
    throw ParameterError("epsilon must lie in (0, 1/4), got " +
                         std::to_string(epsilon));
  }
}

SeedParams SeedParams::make(double epsilon, double p, std::size_t n) {
  return scaled(epsilon, p, n, kPaperConstant);
}

SeedParams SeedParams::scaled(double epsilon, double p, std::size_t n,
                              double constant) {
  validate_epsilon(epsilon);
  validate_probability(p);
  if (!(constant > 0.0) || !std::isfinite(constant)) {
    throw ParameterError("scale constant must be positive");
  }
  SeedParams s;
  s.epsilon = epsilon;
  s.constant = constant;
  s.delta = epsilon * epsilon;
  const double eps5 = std::pow(epsilon, 5);
  s.gamma = eps5 / constant;
  s.degree_threshold = 1.0 / (p * s.gamma);
  s.query_budget =
      saturating_ceil(2.0 * constant * static_cast<double>(n) / (eps5 * p));
  return s;
}

double seed_length_bound(const SeedParams& params, std::size_t n) {
  return 10.0 * params.gamma / params.delta * static_cast<double>(n);
}

bool seed_length_bound_applies(const SeedParams& params, std::size_t n) {
  return static_cast<double>(n) >= 4.0 * std::log(2.0 / params.delta);
}

LmsPartition partition_lms(std::span<const double> c, double epsilon) {
  validate_epsilon(epsilon);
  LmsPartition out{VertexSet(c.size()), VertexSet(c.size()),
                   VertexSet(c.size()), epsilon, 1.0 - 2.0 * epsilon};
  for (Vertex v = 0; v < c.size(); ++v) {
    if (!(c[v] >= 0.0 && c[v] <= 1.0)) {
      throw ParameterError("c_" + std::to_string(v) + " = " +
                           std::to_string(c[v]) + " is not a probability");
    }
    if (c[v] >= out.upper) {
      out.L.insert(v);
    } else if (c[v] <= out.lower) {
      out.S.insert(v);
    } else {
      out.M.insert(v);
    }
  }
  return out;
}

LmsPartition partition_lms(std::span<const ProbEstimate> c, double epsilon) {
  std::vector<double> means;
  means.reserve(c.size());
  for (const auto& e : c) means.push_back(e.mean);
  return partition_lms(means, epsilon);
}

VertexSet decided(const BaseGraph& g, const VertexSet& m, const VertexSet& q,
                  const Realization& r, const VertexSet& vc) {
  check_inputs(g, m, q, r, vc);
  return decided_unchecked(g, m, q, r, vc);
}

VertexSet undecided(const BaseGraph& g, const VertexSet& m, const VertexSet& q,
                    const Realization& r, const VertexSet& vc) {
  check_inputs(g, m, q, r, vc);
  return (m - q) - decided_unchecked(g, m, q, r, vc);
}

VertexSet problematic(const BaseGraph& g, const VertexSet& m,
                      const VertexSet& q, const Realization& r,
                      const VertexSet& vc, const SeedParams& params) {
  check_inputs(g, m, q, r, vc);
  const VertexSet und = (m - q) - decided_unchecked(g, m, q, r, vc);
  return threshold_set(g, m, q, und, &vc, params.degree_threshold);
}

VertexSet set_a(const BaseGraph& g, const VertexSet& m, const VertexSet& q,
                const Realization& r, const VertexSet& vc,
                const SeedParams& params) {
  check_inputs(g, m, q, r, vc);
  const VertexSet und = (m - q) - decided_unchecked(g, m, q, r, vc);
  return threshold_set(g, m, q, und, nullptr, params.degree_threshold);
}

VertexSet SeedSequence::as_set(std::size_t n) const {
  return VertexSet(n, std::span<const Vertex>(q));
}

SeedSequence vertex_seed(const BaseGraph& g, const VertexSet& m, double p,
                         const SeedParams& params, const SeedConfig& config) {
  validate_probability(p);
  if (m.universe() != g.num_vertices()) {
    throw ContractError("M must be a vertex set of the graph");
  }
  EstimatorConfig probe;
  probe.mode = config.mode;
  const bool exact = resolve_mode(g, probe) == EstimateMode::kExact;
  if (!exact && config.trials == 0) {
    throw ParameterError("trials must be positive");
  }
  std::optional<RealizationEnumeration> enumeration;
  if (exact) enumeration.emplace(g, p);
  const SeedSpec stream = config.seed.substream(Stream::kVertexSeed);
  const std::size_t samples = exact ? enumeration->size() : config.trials;

  SeedSequence out;
  VertexSet q(g.num_vertices());
  for (std::size_t iteration = 0;; ++iteration) {
    SeedStep step;
    step.iteration = iteration;
    const VertexSet open = m - q;
    std::vector<Vertex> candidates;
    for (Vertex v : open) {
      std::size_t reachable = 0;
      for (const auto& inc : g.incident(v)) {
        if (open.contains(inc.neighbor)) ++reachable;
      }
      if (static_cast<double>(reachable) >= params.degree_threshold) {
        candidates.push_back(v);
      }
    }
    step.candidates = candidates.size();

    struct Partial {
      std::vector<double> hits;
      double undecided_sum = 0.0;
      std::size_t undecided_min = std::numeric_limits<std::size_t>::max();
      std::size_t undecided_max = 0;
    };
    const auto parts = map_chunks(
        samples, exact ? 4096 : kDefaultChunk, config.threads,
        [&](std::size_t b, std::size_t e) {
          Partial acc;
          acc.hits.assign(candidates.size(), 0.0);
          for (std::size_t s = b; s < e; ++s) {
            double w = 1.0;
            std::optional<Realization> r;
            if (exact) {
              auto wr = enumeration->at(s);
              w = wr.weight;
              r.emplace(std::move(wr.realization));
            } else {
              r.emplace(sample_realization(
                  g, p, stream, iteration * config.trials + s));
            }
            const VertexSet vc = mvc_exact(*r).cover & m;
            const VertexSet und =
                open - decided_unchecked(g, m, q, *r, vc);
            const std::size_t u = und.size();
            acc.undecided_sum += w * static_cast<double>(u);
            acc.undecided_min = std::min(acc.undecided_min, u);
            acc.undecided_max = std::max(acc.undecided_max, u);
            for (std::size_t i = 0; i < candidates.size(); ++i) {
              const Vertex v = candidates[i];
              if (vc.contains(v)) continue;
              std::size_t count = 0;
              for (const auto& inc : g.incident(v)) {
                if (und.contains(inc.neighbor)) ++count;
              }
              if (static_cast<double>(count) >= params.degree_threshold) {
                acc.hits[i] += w;
              }
            }
          }
          return acc;
        });
    Partial total;
    total.hits.assign(candidates.size(), 0.0);
    for (const auto& part : parts) {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        total.hits[i] += part.hits[i];
      }
      total.undecided_sum += part.undecided_sum;
      total.undecided_min = std::min(total.undecided_min, part.undecided_min);
      total.undecided_max = std::max(total.undecided_max, part.undecided_max);
    }
    if (samples > 0) {
      step.undecided_mean =
          exact ? total.undecided_sum
                : total.undecided_sum / static_cast<double>(samples);
      step.undecided_min = total.undecided_min;
      step.undecided_max = total.undecided_max;
    }

    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      // Exact weights carry rounding noise; equal estimates go to the lowest id.
      const double margin = exact ? 1e-12 : 0.0;
      if (!best || total.hits[i] > total.hits[*best] + margin) best = i;
    }
    if (best) {
      step.best =
          exact ? ProbEstimate{total.hits[*best], 0.0, 0.0, samples,
                               EstimateMode::kExact}
                : bernoulli_estimate(
                      static_cast<std::size_t>(total.hits[*best]), samples);
    } else {
      step.best = ProbEstimate{0.0, 0.0, 0.0, samples,
                               exact ? EstimateMode::kExact
                                     : EstimateMode::kMonteCarlo};
    }
    if (best && step.best.mean >= params.delta) {
      step.chosen = candidates[*best];
      q.insert(*step.chosen);
      out.q.push_back(*step.chosen);
      out.steps.push_back(step);
      continue;
    }
    out.steps.push_back(step);
    break;
  }
  return out;
}

SeedSet seed_set(const BaseGraph& g, const LmsPartition& partition,
                 std::span<const Vertex> q, const VertexSet& q_vc,
                 const PartialRealization& f_star, const SeedParams& params) {
  const std::size_t n = g.num_vertices();
  if (partition.M.universe() != n) {
    throw ContractError("partition does not match the graph");
  }
  VertexSet qset(n);
  for (Vertex v : q) {
    if (v >= n || qset.contains(v)) {
      throw ContractError("Q must list distinct vertices of the graph");
    }
    qset.insert(v);
  }
  check_subset(qset, partition.M, "Q must be a subset of M");
  check_subset(q_vc, qset, "Q_VC must be a subset of Q");
  f_star.validate(g.num_edges());
  if (!(f_star.fixed_edges == edges_touching(g, qset))) {
    throw ContractError(
        "F* must be fixed on exactly the edges with an endpoint in Q");
  }

  SeedSet out;
  out.l_part = partition.L;
  out.q_part = qset;
  out.decided_part = VertexSet(n);
  const VertexSet sources = qset - q_vc;
  const VertexSet open = partition.M - qset;
  const auto edges = g.edges();
  for (EdgeIndex e : f_star.fixed_outcomes) {
    const auto [u, v] = edges[e];
    if (sources.contains(u) && open.contains(v)) out.decided_part.insert(v);
    if (sources.contains(v) && open.contains(u)) out.decided_part.insert(u);
  }
  const VertexSet und = open - out.decided_part;
  out.a_part = threshold_set(g, partition.M, qset, und, nullptr,
                             params.degree_threshold);
  out.all = out.l_part | out.q_part | out.decided_part | out.a_part;
  out.residual_edges = count_induced_edges(g, out.all.complement());
  out.within_budget = out.residual_edges <= params.query_budget;
  return out;
}

SeedSet seed_of_realization(const BaseGraph& g, const Realization& r,
                            const LmsPartition& partition,
                            std::span<const Vertex> q,
                            const SeedParams& params) {
  const VertexSet qset(g.num_vertices(), q);
  const VertexSet q_vc = qset & mvc_exact(r).cover;
  const auto f_star = PartialRealization::of(r, edges_touching(g, qset));
  return seed_set(g, partition, q, q_vc, f_star, params);
}

}  // namespace stochvc
