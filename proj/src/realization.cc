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

#include "stochvc/realization.h"

#include <bit>
#include <cmath>
#include <string>

#include "stochvc/errors.h"

namespace stochvc {

void validate_probability(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw ParameterError("edge probability must lie in (0, 1], got " +
                         std::to_string(p));
  }
}

Realization::Realization(const BaseGraph& base, EdgeSet present)
    : base_(&base), present_(std::move(present)) {
  if (present_.universe() != base.num_edges()) {
    throw ContractError("realization has " +
                        std::to_string(present_.universe()) +
                        " edge bits but the base graph has " +
                        std::to_string(base.num_edges()) + " edges");
  }
}

Realization Realization::restricted_to(const InducedSubgraph& sub) const {
  EdgeSet present(sub.graph.num_edges());
  for (EdgeIndex e = 0; e < sub.edge_map.size(); ++e) {
    if (present_.contains(sub.edge_map[e])) present.insert(e);
  }
  return Realization(sub.graph, std::move(present));
}

EdgeSet Realization::present_within(const VertexSet& keep) const {
  EdgeSet out(present_.universe());
  for (EdgeIndex e : present_) {
    const auto& edge = base_->edge(e);
    if (keep.contains(edge.u) && keep.contains(edge.v)) out.insert(e);
  }
  return out;
}

VertexSet Realization::realized_neighbors(Vertex v,
                                          const VertexSet& restrict) const {
  VertexSet out(base_->num_vertices());
  for (const auto& inc : base_->incident(v)) {
    if (present_.contains(inc.edge) && restrict.contains(inc.neighbor)) {
      out.insert(inc.neighbor);
    }
  }
  return out;
}

PartialRealization PartialRealization::of(const Realization& r,
                                          const EdgeSet& fixed) {
  return {fixed, r.present() & fixed};
}

void PartialRealization::validate(std::size_t num_edges) const {
  if (fixed_edges.universe() != num_edges ||
      fixed_outcomes.universe() != num_edges) {
    throw ContractError("partial realization sized for " +
                        std::to_string(fixed_edges.universe()) +
                        " edges, graph has " + std::to_string(num_edges));
  }
  if (!fixed_outcomes.is_subset_of(fixed_edges)) {
    throw ContractError("partial realization has outcomes outside its fixed set");
  }
}

void sample_edges_into(double p, const EdgeSet& edges,
                       const SeedSpec& seed, std::uint64_t trial,
                       EdgeSet& present) {
  const SeedSpec stream = seed.substream(Stream::kRealization);
  for (EdgeIndex e : edges) {
    present.set(e, draw_bernoulli(stream, trial, e, p));
  }
}

Realization sample_realization(const BaseGraph& g, double p,
                               const SeedSpec& seed, std::uint64_t trial) {
  validate_probability(p);
  EdgeSet present(g.num_edges());
  sample_edges_into(p, g.all_edges(), seed, trial, present);
  return Realization(g, std::move(present));
}

Realization sample_conditional(const BaseGraph& g, double p,
                               const PartialRealization& partial,
                               const SeedSpec& seed, std::uint64_t trial) {
  validate_probability(p);
  partial.validate(g.num_edges());
  EdgeSet present = partial.fixed_outcomes;
  sample_edges_into(p, partial.fixed_edges.complement(), seed, trial,
                    present);
  return Realization(g, std::move(present));
}

std::vector<double> realization_weights_by_count(std::size_t m, double p) {
  std::vector<double> w(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    w[k] = std::pow(p, static_cast<double>(k)) *
           std::pow(1.0 - p, static_cast<double>(m - k));
  }
  return w;
}

RealizationEnumeration::RealizationEnumeration(const BaseGraph& g, double p)
    : graph_(&g) {
  validate_probability(p);
  if (g.num_edges() > kExactEnumerationCap) {
    throw CapacityError("exact enumeration needs m <= " +
                        std::to_string(kExactEnumerationCap) + ", got m = " +
                        std::to_string(g.num_edges()));
  }
  weights_ = realization_weights_by_count(g.num_edges(), p);
}

double RealizationEnumeration::weight(std::uint64_t mask) const {
  return weights_[std::popcount(mask)];
}

WeightedRealization RealizationEnumeration::at(std::uint64_t mask) const {
  return {Realization(*graph_, EdgeSet::from_mask(graph_->num_edges(), mask)),
          weight(mask)};
}

RealizationEnumeration enumerate_realizations(const BaseGraph& g, double p) {
  return RealizationEnumeration(g, p);
}

QueryOracle::QueryOracle(Realization hidden, EdgeSet allowed,
                         std::size_t budget)
    : hidden_(std::move(hidden)),
      allowed_(std::move(allowed)),
      queried_(hidden_.base().num_edges()),
      budget_(budget) {
  if (allowed_.universe() != hidden_.base().num_edges()) {
    throw ContractError("allowed query set does not match the base graph");
  }
}

bool QueryOracle::query(EdgeIndex e) {
  if (e >= allowed_.universe() || !allowed_.contains(e)) {
    throw ModelViolationError("edge " + std::to_string(e) +
                              " is not in the declared query set");
  }
  if (!queried_.contains(e)) {
    if (used_ >= budget_) {
      throw BudgetError("query budget of " + std::to_string(budget_) +
                        " exhausted");
    }
    queried_.insert(e);
    ++used_;
  }
  return hidden_.has(e);
}

std::size_t QueryOracle::count_uncovered(const VertexSet& cover) const {
  std::size_t uncovered = 0;
  for (EdgeIndex e : hidden_.present()) {
    const auto& edge = hidden_.base().edge(e);
    if (!cover.contains(edge.u) && !cover.contains(edge.v)) ++uncovered;
  }
  return uncovered;
}

}  // namespace stochvc
