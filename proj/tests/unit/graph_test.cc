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

#include <sstream>

#include "doctest.h"
#include "oracles.h"
#include "stochvc/errors.h"
#include "stochvc/graph.h"

using namespace stochvc;

TEST_CASE("parse triangle") {
  const auto g = parse_edge_list("3\n0 1\n1 2\n0 2\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.edge(2) == Edge{0, 2});
}

TEST_CASE("parse skips comments and blank lines") {
  const auto g = parse_edge_list("# header\n\n3\n  # note\n2 1\n\n");
  CHECK(g.num_edges() == 1);
  CHECK(g.edge(0) == Edge{1, 2});
}

TEST_CASE("parse rejects self-loop") {
  CHECK_THROWS_AS(parse_edge_list("2\n0 0\n"), ValidationError);
}

TEST_CASE("parse rejects duplicate, reporting the line") {
  try {
    parse_edge_list("4\n0 1\n1 0\n");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("parse reports malformed line number") {
  try {
    parse_edge_list("3\n0 1\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 5\n"), ValidationError);
}

TEST_CASE("serialize round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::random_graph(9, 0.4, seed);
    CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  }
}

TEST_CASE("labeled edge list interns labels") {
  std::istringstream in("3\nalice bob\nbob carol\n");
  const auto lg = parse_labeled_edge_list(in);
  CHECK(lg.labels == std::vector<std::string>{"alice", "bob", "carol"});
  CHECK(lg.graph.num_edges() == 2);
  CHECK(lg.graph.edge(1) == Edge{1, 2});
}

TEST_CASE("adjacency lists every edge at both endpoints once") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::random_graph(10, 0.5, seed);
    std::vector<int> seen(g.num_edges(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (const auto& inc : g.incident(v)) {
        const auto e = g.edge(inc.edge);
        CHECK((e.u == v || e.v == v));
        CHECK(inc.neighbor == (e.u == v ? e.v : e.u));
        ++seen[inc.edge];
      }
    }
    for (int s : seen) CHECK(s == 2);
  }
}

TEST_CASE("induced subgraph") {
  const auto tri = BaseGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  auto sub = induced_subgraph(tri, VertexSet(3, {0, 1}));
  CHECK(sub.graph.num_edges() == 1);
  CHECK(sub.edge_map == std::vector<EdgeIndex>{0});

  sub = induced_subgraph(tri, VertexSet(3));
  CHECK(sub.graph.num_vertices() == 0);
  CHECK(sub.edge_map.empty());

  const auto path = BaseGraph::from_edges(3, {{0, 1}, {1, 2}});
  sub = induced_subgraph(path, VertexSet(3, {0, 2}));
  CHECK(sub.graph.num_vertices() == 2);
  CHECK(sub.graph.num_edges() == 0);
  CHECK(sub.vertex_map == std::vector<Vertex>{0, 2});
}

TEST_CASE("neighbors within") {
  const auto star = BaseGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(neighbors_within(star, 0, VertexSet(4, {1, 2, 3})) ==
        VertexSet(4, {1, 2, 3}));
  CHECK(neighbors_within(star, 0, VertexSet(4)).empty());
  const auto tri = BaseGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(neighbors_within(tri, 0, VertexSet(3, {1})) == VertexSet(3, {1}));
}

TEST_CASE("canonical order of vertex sets") {
  CHECK(canonical_less(VertexSet(4, {0, 1}), VertexSet(4, {0, 2})));
  CHECK(canonical_less(VertexSet(4, {0, 2}), VertexSet(4, {1})));
  CHECK(canonical_less(VertexSet(4), VertexSet(4, {3})));
  CHECK_FALSE(canonical_less(VertexSet(4, {1}), VertexSet(4, {1})));
  CHECK(canonical_less(VertexSet(4, {0}), VertexSet(4, {0, 1})));
}

TEST_CASE("components and edge counts") {
  const auto g = BaseGraph::from_edges(7, {{0, 1}, {1, 2}, {4, 5}});
  const auto comps = nontrivial_components(g, g.all_vertices());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet(7, {0, 1, 2}));
  CHECK(comps[1] == VertexSet(7, {4, 5}));
  CHECK(count_induced_edges(g, VertexSet(7, {0, 1, 2, 4})) == 2);
  CHECK(edges_touching(g, VertexSet(7, {1})) == EdgeSet(3, {0, 1}));
}
