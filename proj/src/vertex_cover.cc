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

#include "stochvc/vertex_cover.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>

#include "stochvc/errors.h"
#include "stochvc/mvc.h"
#include "stochvc/parallel.h"

namespace stochvc {
namespace {

constexpr double kTieTolerance = 1e-12;
constexpr std::size_t kHardEnumerationLimit = 30;
constexpr double kZ95 = 1.959963984540054;

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // of a single trial; zero when exact
  bool exact = true;
};

// E|MVC(G*[comp])| for one connected vertex set of G.
Moments component_expectation(const BaseGraph& g, double p,
                              const VertexSet& comp, std::size_t trials,
                              const SeedSpec& seed) {
  const auto sub = induced_subgraph(g, comp);
  const std::size_t m = sub.graph.num_edges();
  if (m <= kExactEnumerationCap) {
    const detail::SmallGraph small(sub.graph);
    const auto weights = realization_weights_by_count(m, p);
    detail::AdjMasks adj;
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      small.adjacency(mask, adj);
      total += weights[std::popcount(mask)] *
               detail::mvc_size_masks(adj, small.num_vertices());
    }
    return {total, 0.0, true};
  }
  if (trials == 0) throw ParameterError("trials must be positive");
  const SeedSpec stream = seed.substream(Stream::kRealization);
  double sum = 0.0, sum_sq = 0.0;
  const bool fits = sub.graph.num_vertices() <= 64 && m <= 64;
  std::optional<detail::SmallGraph> small;
  if (fits) small.emplace(sub.graph);
  detail::AdjMasks adj;
  for (std::size_t t = 0; t < trials; ++t) {
    double size = 0.0;
    if (fits) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (draw_bernoulli(stream, t, sub.edge_map[i], p)) {
          mask |= std::uint64_t{1} << i;
        }
      }
      small->adjacency(mask, adj);
      size = detail::mvc_size_masks(adj, small->num_vertices());
    } else {
      EdgeSet present(m);
      for (std::size_t i = 0; i < m; ++i) {
        if (draw_bernoulli(stream, t, sub.edge_map[i], p)) {
          present.insert(static_cast<EdgeIndex>(i));
        }
      }
      size = static_cast<double>(mvc_size(sub.graph, present));
    }
    sum += size;
    sum_sq += size * size;
  }
  const double n = static_cast<double>(trials);
  const double mean = sum / n;
  const double var =
      trials > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
  return {mean, var, false};
}

ProbEstimate combine(double base, const std::vector<Moments>& parts,
                     std::size_t trials) {
  double mean = base, var = 0.0;
  bool exact = true;
  for (const auto& m : parts) {
    mean += m.mean;
    var += m.variance;
    exact = exact && m.exact;
  }
  if (exact) return {mean, 0.0, 0.0, 0, EstimateMode::kExact};
  const double n = static_cast<double>(trials);
  const double se = std::sqrt(var / n);
  return {mean, std::max(kZ95 * se, 1.0 / n), se, trials,
          EstimateMode::kMonteCarlo};
}

bool canonical_less_mask(std::uint64_t a, std::uint64_t b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

struct Scored {
  VertexSet s;
  ProbEstimate objective;
  std::size_t residual = 0;
};

bool better(const ProbEstimate& a, const VertexSet& sa, const ProbEstimate& b,
            const VertexSet& sb) {
  if (a.mean < b.mean - kTieTolerance) return true;
  if (a.mean > b.mean + kTieTolerance) return false;
  return canonical_less(sa, sb);
}

Solution solve_exact(const BaseGraph& g, double p, const VertexSet& q,
                     std::uint64_t budget, const SolverConfig& config) {
  const std::size_t n = g.num_vertices();
  if (n > config.enumeration_cap || n > kHardEnumerationLimit) {
    throw CapacityError("exact enumeration of commit sets needs n <= " +
                        std::to_string(std::min(config.enumeration_cap,
                                                kHardEnumerationLimit)) +
                        ", got n = " + std::to_string(n));
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  std::uint64_t q_mask = 0;
  for (Vertex v : q) q_mask |= std::uint64_t{1} << v;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << n) - 1;

  struct Best {
    bool found = false;
    std::uint64_t mask = 0;
    ProbEstimate objective;
    std::size_t residual = 0;
    std::size_t evaluated = 0;
  };
  const auto parts = map_chunks(
      std::size_t{1} << n, 1024, config.threads,
      [&](std::size_t b, std::size_t e) {
        Best best;
        std::unordered_map<std::uint64_t, Moments> memo;
        for (std::uint64_t s = b; s < e; ++s) {
          if ((s & q_mask) != q_mask) continue;
          const std::uint64_t keep = full & ~s;
          std::size_t twice = 0;
          for (std::uint64_t k = keep; k; k &= k - 1) {
            twice += std::popcount(adj[std::countr_zero(k)] & keep);
          }
          const std::size_t residual = twice / 2;
          if (residual > budget) continue;
          ++best.evaluated;
          std::vector<Moments> comps;
          std::uint64_t left = keep;
          while (left) {
            const std::uint64_t root = left & (~left + 1);
            std::uint64_t comp = root, frontier = root;
            while (frontier) {
              std::uint64_t next = 0;
              for (std::uint64_t f = frontier; f; f &= f - 1) {
                next |= adj[std::countr_zero(f)] & keep;
              }
              frontier = next & ~comp;
              comp |= next;
            }
            left &= ~comp;
            if (std::popcount(comp) < 2) continue;
            auto it = memo.find(comp);
            if (it == memo.end()) {
              it = memo
                       .emplace(comp, component_expectation(
                                          g, p, VertexSet::from_mask(n, comp),
                                          config.trials, config.seed))
                       .first;
            }
            comps.push_back(it->second);
          }
          const ProbEstimate obj =
              combine(std::popcount(s), comps, config.trials);
          const bool take =
              !best.found || obj.mean < best.objective.mean - kTieTolerance ||
              (obj.mean <= best.objective.mean + kTieTolerance &&
               canonical_less_mask(s, best.mask));
          if (take) {
            best.found = true;
            best.mask = s;
            best.objective = obj;
            best.residual = residual;
          }
        }
        return best;
      });
  Best best;
  std::size_t evaluated = 0;
  for (const auto& part : parts) {
    evaluated += part.evaluated;
    if (!part.found) continue;
    const bool take =
        !best.found || part.objective.mean < best.objective.mean - kTieTolerance ||
        (part.objective.mean <= best.objective.mean + kTieTolerance &&
         canonical_less_mask(part.mask, best.mask));
    if (take) {
      const std::size_t keep_evaluated = best.evaluated;
      best = part;
      best.evaluated = keep_evaluated;
    }
  }
  if (!best.found) {
    throw ContractError("no feasible commit set; S = V should always qualify");
  }
  Solution out;
  out.s_hat = VertexSet::from_mask(n, best.mask);
  out.objective = best.objective;
  out.feasible = true;
  out.residual_edges = best.residual;
  out.candidates_evaluated = evaluated;
  return out;
}

VertexSet greedy_peel(const BaseGraph& g, VertexSet s, std::uint64_t budget) {
  while (count_induced_edges(g, s.complement()) > budget) {
    const VertexSet keep = s.complement();
    Vertex pick = 0;
    std::size_t best = 0;
    for (Vertex v : keep) {
      std::size_t d = 0;
      for (const auto& inc : g.incident(v)) {
        if (keep.contains(inc.neighbor)) ++d;
      }
      if (d > best) {
        best = d;
        pick = v;
      }
    }
    s.insert(pick);
  }
  return s;
}

Solution solve_candidates(const BaseGraph& g, double p,
                          const SeedParams& params, const VertexSet& q,
                          std::uint64_t budget, const SolverConfig& config,
                          const CandidateInputs* inputs) {
  std::optional<CandidateInputs> built;
  if (inputs == nullptr) {
    EstimatorConfig est;
    est.seed = config.seed;
    est.threads = config.threads;
    SeedConfig sc;
    sc.seed = config.seed;
    sc.threads = config.threads;
    built = build_candidate_inputs(g, p, params, est, sc);
    inputs = &*built;
  }
  const std::size_t n = g.num_vertices();
  const auto& part = inputs->partition;
  const VertexSet qseq(n, std::span<const Vertex>(inputs->q));

  std::vector<VertexSet> family;
  family.push_back(VertexSet(n));
  family.push_back(VertexSet::all(n));
  family.push_back(part.L);
  family.push_back(part.L | qseq);
  const SeedSpec fixed = config.seed.substream(Stream::kFixedSample);
  for (std::size_t j = 0; j < config.fixed_samples; ++j) {
    const auto r = sample_realization(g, p, fixed, j);
    if (inputs->q.size() <= config.max_enumerated_q) {
      const auto f_star = PartialRealization::of(r, edges_touching(g, qseq));
      for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << inputs->q.size());
           ++sub) {
        VertexSet q_vc(n);
        for (std::size_t i = 0; i < inputs->q.size(); ++i) {
          if ((sub >> i) & 1U) q_vc.insert(inputs->q[i]);
        }
        family.push_back(
            seed_set(g, part, inputs->q, q_vc, f_star, params).all);
      }
    } else {
      family.push_back(seed_of_realization(g, r, part, inputs->q, params).all);
    }
  }
  family.push_back(greedy_peel(g, q, budget));
  family.push_back(greedy_peel(g, part.L | q, budget));

  std::vector<VertexSet> admissible;
  for (auto& s : family) {
    if (!q.is_subset_of(s)) continue;
    if (count_induced_edges(g, s.complement()) > budget) continue;
    if (std::find(admissible.begin(), admissible.end(), s) != admissible.end()) {
      continue;
    }
    admissible.push_back(std::move(s));
  }
  if (admissible.empty()) {
    throw ContractError("no feasible candidate; S = V should always qualify");
  }
  const SeedSpec ranking = config.seed.substream(Stream::kCandidates);
  const auto scores =
      map_indices(admissible.size(), config.threads, [&](std::size_t i) {
        return expected_objective(g, p, admissible[i], config.trials, ranking);
      });
  std::size_t best = 0;
  for (std::size_t i = 1; i < admissible.size(); ++i) {
    if (better(scores[i], admissible[i], scores[best], admissible[best])) {
      best = i;
    }
  }
  Solution out;
  out.s_hat = admissible[best];
  out.objective = scores[best];
  if (out.objective.mode == EstimateMode::kMonteCarlo) {
    out.objective = expected_objective(g, p, out.s_hat, 4 * config.trials,
                                       ranking.substream(1));
  }
  out.residual_edges = count_induced_edges(g, out.s_hat.complement());
  out.feasible = out.residual_edges <= budget;
  out.candidates_evaluated = admissible.size();
  return out;
}

}  // namespace

std::size_t objective_g(const VertexSet& s, const Realization& r) {
  const EdgeSet inside = r.present_within(s.complement());
  return s.size() + mvc_size(r.base(), inside);
}

std::string_view to_string(SolverMode mode) {
  return mode == SolverMode::kExactEnumeration ? "exact" : "candidates";
}

SolverMode parse_solver_mode(std::string_view text) {
  if (text == "exact") return SolverMode::kExactEnumeration;
  if (text == "candidates") return SolverMode::kCandidateFamily;
  throw ParameterError("unknown solver mode '" + std::string(text) +
                       "' (expected exact or candidates)");
}

std::uint64_t effective_budget(const SeedParams& params,
                               const SolverConfig& config) {
  return config.budget_override.value_or(params.query_budget);
}

ProbEstimate expected_objective(const BaseGraph& g, double p,
                                const VertexSet& s, std::size_t trials,
                                const SeedSpec& seed) {
  validate_probability(p);
  std::vector<Moments> comps;
  for (const auto& comp : nontrivial_components(g, s.complement())) {
    comps.push_back(component_expectation(g, p, comp, trials, seed));
  }
  return combine(static_cast<double>(s.size()), comps, trials);
}

CandidateInputs build_candidate_inputs(const BaseGraph& g, double p,
                                       const SeedParams& params,
                                       const EstimatorConfig& estimator,
                                       const SeedConfig& seed_config) {
  const auto stats = mvc_statistics(g, p, estimator);
  CandidateInputs out{partition_lms(stats.vertex, params.epsilon), {}};
  out.q = vertex_seed(g, out.partition.M, p, params, seed_config).q;
  return out;
}

Solution solve_problem_1(const BaseGraph& g, double p, const SeedParams& params,
                         const SolverConfig& config,
                         const CandidateInputs* inputs) {
  return solve_problem_3(g, p, params, VertexSet(g.num_vertices()), config,
                         inputs);
}

Solution solve_problem_3(const BaseGraph& g, double p, const SeedParams& params,
                         const VertexSet& q, const SolverConfig& config,
                         const CandidateInputs* inputs) {
  validate_probability(p);
  if (q.universe() != g.num_vertices()) {
    throw ContractError("Q must be a vertex set of the graph");
  }
  const std::uint64_t budget = effective_budget(params, config);
  if (config.mode == SolverMode::kExactEnumeration) {
    return solve_exact(g, p, q, budget, config);
  }
  return solve_candidates(g, p, params, q, budget, config, inputs);
}

RunResult run_vertex_cover(const BaseGraph& g, const VertexSet& s_hat,
                           QueryOracle& oracle) {
  const EdgeSet allowed = induced_edge_set(g, s_hat.complement());
  if (!(oracle.allowed() == allowed)) {
    throw ContractError("oracle must allow exactly the edges of G[V \\ S]");
  }
  EdgeSet revealed(g.num_edges());
  for (EdgeIndex e : allowed) {
    if (oracle.query(e)) revealed.insert(e);
  }
  RunResult out;
  out.cover = s_hat | mvc_exact(g, revealed).cover;
  out.queries_used = oracle.queries_used();
  out.budget = oracle.budget();
  out.realized_edge_violations = oracle.count_uncovered(out.cover);
  return out;
}

bool dense_fallback_check(const BaseGraph& g, const SeedParams& params) {
  return g.num_edges() <= params.query_budget;
}

Plan plan_vertex_cover(const BaseGraph& g, double p, const SeedParams& params,
                       const SolverConfig& solver,
                       const EstimatorConfig& estimator,
                       const SeedConfig& seed_config) {
  Plan plan;
  const std::uint64_t budget = effective_budget(params, solver);
  if (g.num_edges() <= budget) {
    plan.dense_fallback = true;
    plan.solution.s_hat = VertexSet(g.num_vertices());
    plan.solution.objective = expected_mvc(g, p, estimator);
    plan.solution.feasible = true;
    plan.solution.residual_edges = g.num_edges();
    plan.solution.candidates_evaluated = 1;
    return plan;
  }
  plan.inputs = build_candidate_inputs(g, p, params, estimator, seed_config);
  const VertexSet q(g.num_vertices(),
                    std::span<const Vertex>(plan.inputs->q));
  plan.solution = solve_problem_3(g, p, params, q, solver, &*plan.inputs);
  return plan;
}

std::vector<RunResult> run_trials(const BaseGraph& g, double p,
                                  const VertexSet& s_hat, std::uint64_t budget,
                                  std::size_t trials, const SeedSpec& seed,
                                  int threads) {
  const EdgeSet allowed = induced_edge_set(g, s_hat.complement());
  const std::size_t cap =
      static_cast<std::size_t>(std::min<std::uint64_t>(budget, SIZE_MAX));
  return map_indices(trials, threads, [&](std::size_t t) {
    QueryOracle oracle(sample_realization(g, p, seed, t), allowed, cap);
    return run_vertex_cover(g, s_hat, oracle);
  });
}

}  // namespace stochvc
