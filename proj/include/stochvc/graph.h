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

// Base graph representation: dense integer vertex ids, undirected edges
// stored once with a stable index, and bit-vector vertex/edge sets.

#ifndef STOCHVC_GRAPH_H_
#define STOCHVC_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace stochvc {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

// Largest vertex count handled by the 2^n subset-enumeration paths.
inline constexpr std::size_t kExactEnumerationCap = 20;

// A set of integer ids drawn from [0, universe). `Tag` keeps vertex and edge
// sets from being mixed up at compile time.
template <typename Tag>
class IndexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::uint32_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = value_type;

    iterator() = default;
    iterator(const Bits* bits, std::size_t pos) : bits_(bits), pos_(pos) {}
    value_type operator*() const { return static_cast<value_type>(pos_); }
    iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.pos_ == b.pos_;
    }

   private:
    const Bits* bits_ = nullptr;
    std::size_t pos_ = Bits::npos;
  };

  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : bits_(universe) {}
  IndexSet(std::size_t universe, std::initializer_list<std::uint32_t> ids)
      : bits_(universe) {
    for (auto id : ids) insert(id);
  }
  IndexSet(std::size_t universe, std::span<const std::uint32_t> ids)
      : bits_(universe) {
    for (auto id : ids) insert(id);
  }

  static IndexSet all(std::size_t universe) {
    IndexSet s(universe);
    s.bits_.set();
    return s;
  }

  // Bit i of `mask` is element i. Requires universe <= 64.
  static IndexSet from_mask(std::size_t universe, std::uint64_t mask) {
    IndexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) {
      if ((mask >> i) & 1U) s.bits_.set(i);
    }
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(std::uint32_t id) const { return bits_.test(id); }
  void insert(std::uint32_t id) { bits_.set(id); }
  void erase(std::uint32_t id) { bits_.reset(id); }
  void set(std::uint32_t id, bool value) { bits_.set(id, value); }

  iterator begin() const { return iterator(&bits_, bits_.find_first()); }
  iterator end() const { return iterator(&bits_, Bits::npos); }

  std::vector<std::uint32_t> to_vector() const {
    return std::vector<std::uint32_t>(begin(), end());
  }

  bool is_subset_of(const IndexSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const IndexSet& other) const {
    return bits_.intersects(other.bits_);
  }

  IndexSet& operator|=(const IndexSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  IndexSet& operator&=(const IndexSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  IndexSet& operator-=(const IndexSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }
  IndexSet complement() const {
    IndexSet s = *this;
    s.bits_.flip();
    return s;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.bits_ == b.bits_;
  }

  // Canonical order used everywhere a tie between sets must be broken: the
  // sorted element lists compared lexicographically, so {0,1} < {0,2} < {1}.
  friend bool canonical_less(const IndexSet& a, const IndexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
  }

  const Bits& bits() const { return bits_; }

 private:
  Bits bits_;
};

struct VertexTag {};
struct EdgeTag {};
using VertexSet = IndexSet<VertexTag>;
using EdgeSet = IndexSet<EdgeTag>;

struct Edge {
  Vertex u;
  Vertex v;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeIndex edge;
};

// The known graph G. Immutable after construction; safe to share across
// threads.
class BaseGraph {
 public:
  BaseGraph() = default;

  // Validates and normalizes each pair to u < v. Edge i of the result is the
  // i-th input pair. Throws ValidationError on self-loops, duplicates or ids
  // outside [0, n).
  static BaseGraph from_edges(std::size_t n,
                              std::span<const std::pair<Vertex, Vertex>> edges);
  static BaseGraph from_edges(
      std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(Vertex v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  std::optional<EdgeIndex> find_edge(Vertex a, Vertex b) const;

  VertexSet all_vertices() const { return VertexSet::all(n_); }
  EdgeSet all_edges() const { return EdgeSet::all(edges_.size()); }
  VertexSet empty_vertex_set() const { return VertexSet(n_); }
  EdgeSet empty_edge_set() const { return EdgeSet(edges_.size()); }

  friend bool operator==(const BaseGraph& a, const BaseGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

// Edge-list text: first significant line `n`, then one `u v` pair per line.
// Lines whose first non-blank character is '#' and blank lines are skipped.
BaseGraph parse_edge_list(std::istream& in);
BaseGraph parse_edge_list(std::string_view text);

// Inverse of parse_edge_list for canonical inputs (no comments, u < v).
std::string serialize_edge_list(const BaseGraph& g);

// Same format, but vertex tokens are arbitrary labels interned to dense ids
// in order of first appearance. The leading count line is not used.
struct LabeledGraph {
  BaseGraph graph;
  std::vector<std::string> labels;  // labels[id]
};
LabeledGraph parse_labeled_edge_list(std::istream& in);

struct InducedSubgraph {
  BaseGraph graph;
  std::vector<Vertex> vertex_map;   // new vertex id -> original id
  std::vector<EdgeIndex> edge_map;  // new edge index -> original index
};

// G[keep] with vertices renumbered densely in increasing original order.
InducedSubgraph induced_subgraph(const BaseGraph& g, const VertexSet& keep);

// |E(G[keep])| without materializing the subgraph.
std::size_t count_induced_edges(const BaseGraph& g, const VertexSet& keep);

// Edge indices of G[keep].
EdgeSet induced_edge_set(const BaseGraph& g, const VertexSet& keep);

// N_G(v) ∩ restrict.
VertexSet neighbors_within(const BaseGraph& g, Vertex v,
                           const VertexSet& restrict);

// Edges of G with at least one endpoint in `vs`.
EdgeSet edges_touching(const BaseGraph& g, const VertexSet& vs);

// Vertex sets of the connected components of G[keep] that contain at least
// one edge, ordered by lowest vertex.
std::vector<VertexSet> nontrivial_components(const BaseGraph& g,
                                             const VertexSet& keep);

}  // namespace stochvc

#endif  // STOCHVC_GRAPH_H_
