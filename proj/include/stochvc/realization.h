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

// Realized graphs G* ~ G_p, partial fixing of an edge subset, exhaustive
// enumeration for tiny graphs, and the non-adaptive query oracle.

#ifndef STOCHVC_REALIZATION_H_
#define STOCHVC_REALIZATION_H_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "stochvc/graph.h"
#include "stochvc/rng.h"

namespace stochvc {

// Throws ParameterError unless 0 < p <= 1.
void validate_probability(double p);

// Edge-presence bit vector over a base graph. Holds a non-owning pointer to
// the graph, which must outlive it.
class Realization {
 public:
  Realization(const BaseGraph& base, EdgeSet present);

  const BaseGraph& base() const { return *base_; }
  const EdgeSet& present() const { return present_; }
  bool has(EdgeIndex e) const { return present_.contains(e); }
  std::size_t num_present() const { return present_.size(); }

  // The same realization seen through an induced subgraph's edge map.
  Realization restricted_to(const InducedSubgraph& sub) const;

  // Present edges with both endpoints in `keep`.
  EdgeSet present_within(const VertexSet& keep) const;

  // Realized neighbors of v inside `restrict`.
  VertexSet realized_neighbors(Vertex v, const VertexSet& restrict) const;

  friend bool operator==(const Realization& a, const Realization& b) {
    return a.base_ == b.base_ && a.present_ == b.present_;
  }

 private:
  const BaseGraph* base_;
  EdgeSet present_;
};

// The outcome of a fixed edge subset F. `fixed_outcomes` holds the present
// edges of F and is always a subset of `fixed_edges`.
struct PartialRealization {
  EdgeSet fixed_edges;
  EdgeSet fixed_outcomes;

  static PartialRealization of(const Realization& r, const EdgeSet& fixed);
  // Throws ContractError if the outcome bits leave F or sizes disagree with m.
  void validate(std::size_t num_edges) const;
};

// Trial `trial` of the realization stream of `seed`. Every edge is an
// independent Bernoulli(p) draw keyed by (seed, trial, edge index), so two
// callers asking for the same (seed, trial) see the same G*.
Realization sample_realization(const BaseGraph& g, double p,
                               const SeedSpec& seed, std::uint64_t trial = 0);

// As sample_realization, with the edges of `partial.fixed_edges` forced to
// their fixed outcomes. Unfixed edges use the same draws as
// sample_realization, so F = {} reproduces it bit for bit.
Realization sample_conditional(const BaseGraph& g, double p,
                               const PartialRealization& partial,
                               const SeedSpec& seed, std::uint64_t trial = 0);

// Fills `present` with the draws for `edges` only (others untouched).
void sample_edges_into(double p, const EdgeSet& edges,
                       const SeedSpec& seed, std::uint64_t trial,
                       EdgeSet& present);

// Probability of each presence count k: p^k (1-p)^(m-k).
std::vector<double> realization_weights_by_count(std::size_t m, double p);

struct WeightedRealization {
  Realization realization;
  double weight;
};

// All 2^m realizations of g with their product-measure weights. Bit i of the
// enumeration index is edge i. Requires m <= kExactEnumerationCap.
class RealizationEnumeration {
 public:
  RealizationEnumeration(const BaseGraph& g, double p);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = WeightedRealization;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = WeightedRealization;

    iterator() = default;
    iterator(const RealizationEnumeration* owner, std::uint64_t mask)
        : owner_(owner), mask_(mask) {}
    WeightedRealization operator*() const { return owner_->at(mask_); }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++mask_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    const RealizationEnumeration* owner_ = nullptr;
    std::uint64_t mask_ = 0;
  };

  std::uint64_t size() const { return std::uint64_t{1} << graph_->num_edges(); }
  WeightedRealization at(std::uint64_t mask) const;
  double weight(std::uint64_t mask) const;
  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

 private:
  const BaseGraph* graph_;
  std::vector<double> weights_;
};

RealizationEnumeration enumerate_realizations(const BaseGraph& g, double p);

// Hidden realization behind a fixed, pre-declared query set. Repeated queries
// of the same edge are free.
class QueryOracle {
 public:
  QueryOracle(Realization hidden, EdgeSet allowed, std::size_t budget);

  // Throws ModelViolationError if e is outside the allowed set and
  // BudgetError if a new query would exceed the budget.
  bool query(EdgeIndex e);

  std::size_t queries_used() const { return used_; }
  std::size_t budget() const { return budget_; }
  const EdgeSet& allowed() const { return allowed_; }
  const EdgeSet& queried() const { return queried_; }

  // Audit against the hidden realization: realized edges with no endpoint in
  // `cover`. Does not count as a query.
  std::size_t count_uncovered(const VertexSet& cover) const;

 private:
  Realization hidden_;
  EdgeSet allowed_;
  EdgeSet queried_;
  std::size_t budget_;
  std::size_t used_ = 0;
};

}  // namespace stochvc

#endif  // STOCHVC_REALIZATION_H_
