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

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "stochvc/errors.h"
#include "stochvc/mvc.h"
#include "stochvc/vertex_seed.h"

using namespace stochvc;

namespace {

// Star with leaves 0..d-1 and the centre at d.
BaseGraph star_high_centre(std::size_t d) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < d; ++i) pairs.emplace_back(i, static_cast<Vertex>(d));
  return BaseGraph::from_edges(d + 1, pairs);
}

// Reference sets straight from the definitions, over the raw edge list.
struct Reference {
  std::vector<char> decided, undecided, a, problematic;
};

Reference reference(const BaseGraph& g, const VertexSet& m, const VertexSet& q,
                    const Realization& r, const VertexSet& vc,
                    double threshold) {
  const std::size_t n = g.num_vertices();
  Reference out{std::vector<char>(n), std::vector<char>(n),
                std::vector<char>(n), std::vector<char>(n)};
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!r.has(static_cast<EdgeIndex>(i))) continue;
    const Vertex ends[2] = {edges[i].u, edges[i].v};
    for (int k = 0; k < 2; ++k) {
      const Vertex x = ends[k], y = ends[1 - k];
      if (q.contains(y) && !vc.contains(y) && m.contains(x) && !q.contains(x)) {
        out.decided[x] = 1;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    out.undecided[v] = m.contains(v) && !q.contains(v) && !out.decided[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!m.contains(v) || q.contains(v)) continue;
    int count = 0;
    for (const auto& e : edges) {
      if (e.u == v && out.undecided[e.v]) ++count;
      if (e.v == v && out.undecided[e.u]) ++count;
    }
    out.a[v] = count >= threshold;
    out.problematic[v] = out.a[v] && !vc.contains(v);
  }
  return out;
}

VertexSet to_set(const std::vector<char>& flags) {
  VertexSet s(flags.size());
  for (Vertex v = 0; v < flags.size(); ++v) {
    if (flags[v]) s.insert(v);
  }
  return s;
}

SeedParams params_with_threshold(double eps, double p, std::size_t n,
                                 double threshold) {
  return SeedParams::scaled(eps, p, n, std::pow(eps, 5) * p * threshold);
}

}  // namespace

TEST_CASE("parameters") {
  const auto s = SeedParams::make(0.1, 0.5, 100);
  CHECK(s.delta == doctest::Approx(0.01));
  CHECK(s.gamma == doctest::Approx(1e-8));
  CHECK(s.degree_threshold == doctest::Approx(2e8));
  CHECK(s.query_budget == 40000000000ULL);
  CHECK_THROWS_AS(SeedParams::make(0.25, 0.5, 10), ParameterError);
  CHECK_THROWS_AS(SeedParams::make(0.0, 0.5, 10), ParameterError);
  CHECK_THROWS_AS(SeedParams::make(0.1, 0.0, 10), ParameterError);
  CHECK(SeedParams::make(0.01, 1e-9, 1000000).query_budget ==
        std::numeric_limits<std::uint64_t>::max());
  const auto t = params_with_threshold(0.1, 0.1, 7, 6.0);
  CHECK(t.degree_threshold == doctest::Approx(6.0));
}

TEST_CASE("lms partition") {
  const std::vector<double> c{1.0, 0.0, 0.5};
  const auto part = partition_lms(c, 0.1);
  CHECK(part.L == VertexSet(3, {0}));
  CHECK(part.S == VertexSet(3, {1}));
  CHECK(part.M == VertexSet(3, {2}));

  const std::vector<double> zeros(5, 0.0);
  CHECK(partition_lms(zeros, 0.1).S == VertexSet::all(5));

  const std::vector<double> edges{0.1, 0.8, 0.10000001, 0.79999999};
  const auto b = partition_lms(edges, 0.1);
  CHECK(b.S.contains(0));
  CHECK(b.L.contains(1));
  CHECK(b.M == VertexSet(4, {2, 3}));

  const std::vector<double> bad{0.5, 1.5};
  CHECK_THROWS_AS(partition_lms(bad, 0.1), ParameterError);
  CHECK_THROWS_AS(partition_lms(c, 0.3), ParameterError);
}

TEST_CASE("decided examples") {
  const auto g = star_high_centre(4);
  const VertexSet m = VertexSet::all(5);
  const Realization full(g, g.all_edges());
  const VertexSet leaves(5, {0, 1, 2, 3});
  const VertexSet centre(5, {4});

  CHECK(decided(g, m, VertexSet(5), full, centre).empty());
  CHECK(decided(g, m, centre, full, centre).empty());
  CHECK(decided(g, m, centre, full, leaves) == leaves);
  CHECK((decided(g, m, centre, full, leaves) | undecided(g, m, centre, full, leaves)) ==
        m - centre);

  // vc must cover G*[M].
  CHECK_THROWS_AS(decided(g, m, centre, full, VertexSet(5, {0, 1})), ContractError);
  // Q must lie inside M.
  CHECK_THROWS_AS(decided(g, leaves, centre, full, leaves), ContractError);
}

TEST_CASE("problematic and A on a star") {
  const auto g = star_high_centre(6);
  const VertexSet m = VertexSet::all(7);
  const VertexSet none(7);
  const Realization empty(g, g.empty_edge_set());
  const Realization full(g, g.all_edges());

  const auto reach = params_with_threshold(0.1, 0.1, 7, 6.0);
  CHECK(problematic(g, m, none, empty, none, reach) == VertexSet(7, {6}));
  CHECK(set_a(g, m, none, empty, none, reach) == VertexSet(7, {6}));

  // Centre in vc: still in A, never problematic.
  const VertexSet vc(7, {6});
  CHECK(set_a(g, m, none, full, vc, reach) == VertexSet(7, {6}));
  CHECK(problematic(g, m, none, full, vc, reach).empty());

  // Threshold above n is unreachable.
  const auto far = params_with_threshold(0.1, 0.1, 7, 8.0);
  CHECK(problematic(g, m, none, empty, none, far).empty());
  CHECK(set_a(g, m, none, empty, none, far).empty());
}

TEST_CASE("set operations match the definitions on random instances") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 6 + seed % 8;
    const auto g = oracle::random_graph(n, 0.5, seed);
    std::mt19937_64 rng(seed * 7 + 1);
    VertexSet m(n), q(n);
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 4 != 0) m.insert(v);
    }
    for (Vertex v : m) {
      if (rng() % 3 == 0) q.insert(v);
    }
    const double threshold = 1.0 + static_cast<double>(rng() % 4);
    const auto params = params_with_threshold(0.1, 0.5, n, threshold);
    for (std::uint64_t t = 0; t < 5; ++t) {
      const auto r = sample_realization(g, 0.5, SeedSpec{seed, 9}, t);
      const VertexSet vc = mvc_exact(r).cover & m;
      const auto want = reference(g, m, q, r, vc, params.degree_threshold);
      const auto d = decided(g, m, q, r, vc);
      CHECK(d == to_set(want.decided));
      CHECK(undecided(g, m, q, r, vc) == to_set(want.undecided));
      CHECK(set_a(g, m, q, r, vc, params) == to_set(want.a));
      const auto pr = problematic(g, m, q, r, vc, params);
      CHECK(pr == to_set(want.problematic));
      CHECK(pr.is_subset_of(set_a(g, m, q, r, vc, params)));
      CHECK(d.is_subset_of(vc));
    }
  }
}

TEST_CASE("vertex seed picks the planted centre") {
  const auto g = star_high_centre(6);
  const double p = 0.1;
  const auto params = params_with_threshold(0.1, p, 7, 6.0);
  SeedConfig cfg;
  cfg.mode = ModeRequest::kExact;
  const auto seq = vertex_seed(g, VertexSet::all(7), p, params, cfg);
  REQUIRE(seq.q.size() == 1);
  CHECK(seq.q[0] == 6);
  // Centre stays out of the canonical cover unless two leaves are realized.
  const double want = std::pow(0.9, 6) + 6 * 0.1 * std::pow(0.9, 5);
  CHECK(seq.steps[0].best.mean == doctest::Approx(want).epsilon(1e-12));
  CHECK(seq.steps.size() == 2);
  CHECK(seq.steps[1].candidates == 0);

  SeedConfig mc;
  mc.mode = ModeRequest::kMonteCarlo;
  mc.trials = 4000;
  mc.seed = SeedSpec{5, 0};
  const auto est = vertex_seed(g, VertexSet::all(7), p, params, mc);
  REQUIRE(est.q.size() == 1);
  CHECK(est.q[0] == 6);
  CHECK(std::abs(est.steps[0].best.mean - want) <= est.steps[0].best.half_width);
  mc.threads = 4;
  CHECK(vertex_seed(g, VertexSet::all(7), p, params, mc).steps[0].best.mean ==
        est.steps[0].best.mean);
}

TEST_CASE("vertex seed trivial cases") {
  const auto g = oracle::random_graph(10, 0.4, 1);
  SeedConfig cfg;
  cfg.mode = ModeRequest::kMonteCarlo;
  cfg.trials = 200;
  const auto params = SeedParams::make(0.1, 0.5, 10);
  CHECK(vertex_seed(g, VertexSet(10), 0.5, params, cfg).q.empty());
  CHECK(vertex_seed(g, VertexSet::all(10), 0.5, params, cfg).q.empty());
}

TEST_CASE("seed set agrees with the four-set construction") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 7 + seed % 6;
    const auto g = oracle::random_graph(n, 0.45, seed + 100);
    std::mt19937_64 rng(seed);
    std::vector<double> c(n);
    for (auto& x : c) x = static_cast<double>(rng() % 100) / 99.0;
    const auto part = partition_lms(c, 0.2);
    std::vector<Vertex> q;
    for (Vertex v : part.M) {
      if (rng() % 2 == 0) q.push_back(v);
    }
    const VertexSet qset(n, std::span<const Vertex>(q));
    const auto params = params_with_threshold(0.2, 0.5, n, 2.0);
    for (std::uint64_t t = 0; t < 5; ++t) {
      const auto r = sample_realization(g, 0.5, SeedSpec{seed, 4}, t);
      const VertexSet vc = mvc_exact(r).cover & part.M;
      const auto s = seed_of_realization(g, r, part, q, params);
      CHECK(s.decided_part == decided(g, part.M, qset, r, vc));
      CHECK(s.a_part == set_a(g, part.M, qset, r, vc, params));
      CHECK(s.all == (part.L | qset | s.decided_part | s.a_part));
      CHECK((s.decided_part & s.q_part).empty());
      CHECK(s.residual_edges == count_induced_edges(g, s.all.complement()));
    }
  }
}

TEST_CASE("seed set edge cases and contracts") {
  const auto g = star_high_centre(4);
  const std::vector<double> c{0.5, 0.5, 0.5, 0.5, 0.5};
  const auto part = partition_lms(c, 0.1);
  const auto params = params_with_threshold(0.1, 0.5, 5, 3.0);
  const std::vector<Vertex> q{4};
  const VertexSet qset(5, {4});
  const auto f = edges_touching(g, qset);

  const PartialRealization all_present{f, f};
  CHECK(seed_set(g, part, q, qset, all_present, params).decided_part.empty());
  const PartialRealization all_absent{f, g.empty_edge_set()};
  const auto s = seed_set(g, part, q, VertexSet(5), all_absent, params);
  CHECK(s.decided_part.empty());
  CHECK(seed_set(g, part, q, VertexSet(5), all_present, params).decided_part ==
        VertexSet(5, {0, 1, 2, 3}));

  CHECK_THROWS_AS(seed_set(g, part, q, VertexSet(5, {0}), all_present, params),
                  ContractError);
  const PartialRealization wrong{EdgeSet(4, {0}), EdgeSet(4)};
  CHECK_THROWS_AS(seed_set(g, part, q, qset, wrong, params), ContractError);

  const auto tri = BaseGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  const std::vector<double> ones(3, 1.0);
  const Realization r(tri, tri.all_edges());
  const auto sv = seed_of_realization(tri, r, partition_lms(ones, 0.1), {},
                                      SeedParams::make(0.1, 1.0, 3));
  CHECK(sv.all == VertexSet::all(3));
  CHECK(sv.residual_edges == 0);
}
