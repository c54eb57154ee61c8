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

// Brute-force reference implementations. They share nothing with the library
// beyond BaseGraph and the set types, and are only fit for tiny inputs.

#ifndef STOCHVC_TESTS_ORACLES_H_
#define STOCHVC_TESTS_ORACLES_H_

#include <cstdint>
#include <vector>

#include "stochvc/graph.h"
#include "stochvc/rng.h"

namespace oracle {

using stochvc::BaseGraph;
using stochvc::EdgeSet;
using stochvc::Vertex;
using stochvc::VertexSet;

// Smallest vertex cover of the edges in `present` by scanning all 2^n
// vertex subsets; among minimum covers, the one with the lexicographically
// smallest sorted vertex list. n <= 20.
VertexSet canonical_cover(const BaseGraph& g, const EdgeSet& present);

// f[R] = minimum cover size of edge subset R, for every R ⊆ E. n, m <= 20.
std::vector<int> min_cover_table(const BaseGraph& g);

// A[T] = E f(R) with R a p-random subset of T, for every T ⊆ E.
std::vector<double> expected_over_subsets(std::vector<int> const& f,
                                          std::size_t m, double p);

// E[g(S)] for every S ⊆ V (bit i of the index is vertex i). n <= 20.
std::vector<double> all_objectives(const BaseGraph& g, double p);

// Exact E|MVC(G*)|.
double expected_mvc(const BaseGraph& g, double p);

// Exact Pr[v in canonical MVC(G*)].
std::vector<double> membership(const BaseGraph& g, double p);

// Exact p(v | prefix) of the greedy random matching process, by enumerating
// realizations and every uniform matching choice.
std::vector<double> matched_probability(const BaseGraph& g, double p,
                                        const std::vector<Vertex>& prefix);

// Pr[|Z - k p| >= t] for Z ~ Binomial(k, p).
double binomial_tail(int k, double p, double t);

// Pr[|Z - mean| > t] for Z ~ Binomial(k, p) shifted by `offset`.
double binomial_tail_strict(int k, double p, double centre, double t,
                            double offset = 0.0);

// Edge set of the realization mask `mask` (bit i = edge i).
EdgeSet edges_of_mask(const BaseGraph& g, std::uint64_t mask);

// Small random graph with n vertices and independent edges of probability
// `density`, drawn with a plain std::mt19937_64.
BaseGraph random_graph(std::size_t n, double density, std::uint64_t seed);

}  // namespace oracle

#endif  // STOCHVC_TESTS_ORACLES_H_
