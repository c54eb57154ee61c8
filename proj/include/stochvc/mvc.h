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

// Exact minimum vertex cover of realized graphs.
//
// Two solvers share the work. The canonical solver fixes MVC(.) as a
// function: among all minimum covers it returns the one whose sorted vertex
// list is lexicographically smallest. It branches on the lowest-indexed
// vertex that still has an uncovered edge, tries "include" before "exclude",
// and takes the first cover that meets the optimum. The size-only solver is
// free to use reductions (degree 0/1) and max-degree branching; it supplies
// the optimum the canonical search stops at, and is what the expectation
// estimators call when only |MVC| matters.
//
// Both run per connected component of the realized graph on 64-bit
// adjacency masks. Components larger than kBranchAndBoundCap are rejected.

#ifndef STOCHVC_MVC_H_
#define STOCHVC_MVC_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stochvc/graph.h"
#include "stochvc/realization.h"

namespace stochvc {

// Largest connected component (of the realized graph) the exact solvers take.
inline constexpr std::size_t kBranchAndBoundCap = 40;

struct CanonicalCover {
  VertexSet cover;
  std::size_t size = 0;
};

CanonicalCover mvc_exact(const Realization& r);
CanonicalCover mvc_exact(const BaseGraph& g, const EdgeSet& present);

std::size_t mvc_size(const Realization& r);
std::size_t mvc_size(const BaseGraph& g, const EdgeSet& present);

bool is_vertex_cover(const BaseGraph& g, const EdgeSet& present,
                     const VertexSet& cover);

namespace detail {

// Adjacency masks for graphs with at most 64 vertices.
using AdjMasks = std::array<std::uint64_t, 64>;

// Graph with n <= 64 and m <= 64 whose realizations are edge bit masks.
class SmallGraph {
 public:
  explicit SmallGraph(const BaseGraph& g);
  // Only edges in `edges` (bit i = edge i of the base graph) are kept.
  SmallGraph(const BaseGraph& g, const EdgeSet& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Original edge index of local edge i.
  const std::vector<EdgeIndex>& edge_map() const { return edge_map_; }

  void adjacency(std::uint64_t edge_mask, AdjMasks& adj) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<EdgeIndex> edge_map_;
};

// Size of a minimum vertex cover of the graph given by `adj` over vertices
// [0, n). Throws CapacityError for components above kBranchAndBoundCap.
int mvc_size_masks(const AdjMasks& adj, int n);

// Canonical minimum cover as a vertex mask.
std::uint64_t canonical_cover_masks(const AdjMasks& adj, int n);

}  // namespace detail

}  // namespace stochvc

#endif  // STOCHVC_MVC_H_
