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

#include "stochvc/mvc.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "stochvc/errors.h"

namespace stochvc {
namespace detail {
namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
inline int lowest(std::uint64_t m) { return std::countr_zero(m); }

// Greedy maximal matching inside `active`; its size bounds any cover from
// below.
int matching_bound(const AdjMasks& adj, std::uint64_t active) {
  int matched = 0;
  std::uint64_t free = active;
  while (free) {
    const int u = lowest(free);
    free &= free - 1;
    const std::uint64_t nb = adj[u] & free;
    if (nb) {
      free &= ~bit(lowest(nb));
      ++matched;
    }
  }
  return matched;
}

void check_component(std::uint64_t comp) {
  const auto size = static_cast<std::size_t>(std::popcount(comp));
  if (size > kBranchAndBoundCap) {
    throw CapacityError("realized component with " + std::to_string(size) +
                        " vertices exceeds the exact solver cap of " +
                        std::to_string(kBranchAndBoundCap));
  }
}

// Calls f(component_mask) for every connected component with at least one
// edge, in order of lowest vertex.
template <typename F>
void for_each_component(const AdjMasks& adj, int n, F&& f) {
  std::uint64_t remaining = 0;
  for (int v = 0; v < n; ++v) {
    if (adj[v]) remaining |= bit(v);
  }
  while (remaining) {
    std::uint64_t comp = bit(lowest(remaining));
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t reach = 0;
      for (std::uint64_t f2 = frontier; f2; f2 &= f2 - 1) reach |= adj[lowest(f2)];
      frontier = reach & ~comp;
      comp |= frontier;
    }
    remaining &= ~comp;
    check_component(comp);
    f(comp);
  }
}

class SizeSolver {
 public:
  explicit SizeSolver(const AdjMasks& adj) : adj_(adj) {}

  int solve(std::uint64_t comp) {
    best_ = greedy_cover(comp);
    search(comp, 0);
    return best_;
  }

 private:
  int greedy_cover(std::uint64_t active) const {
    int size = 0;
    for (;;) {
      int v = -1, deg = 0;
      for (std::uint64_t a = active; a; a &= a - 1) {
        const int u = lowest(a);
        const int d = std::popcount(adj_[u] & active);
        if (d > deg) {
          deg = d;
          v = u;
        }
      }
      if (v < 0) return size;
      active &= ~bit(v);
      ++size;
    }
  }

  // Every vertex of `active` has degree exactly 2: a disjoint union of cycles.
  int cycles_cover(std::uint64_t active) const {
    int total = 0;
    while (active) {
      std::uint64_t cyc = bit(lowest(active));
      std::uint64_t frontier = cyc;
      while (frontier) {
        std::uint64_t reach = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) reach |= adj_[lowest(f)];
        frontier = reach & active & ~cyc;
        cyc |= frontier;
      }
      active &= ~cyc;
      total += (std::popcount(cyc) + 1) / 2;
    }
    return total;
  }

  void search(std::uint64_t active, int cost) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::uint64_t a = active; a; a &= a - 1) {
        const int u = lowest(a);
        if (!(active & bit(u))) continue;
        const std::uint64_t nb = adj_[u] & active;
        if (nb == 0) {
          active &= ~bit(u);
          changed = true;
        } else if ((nb & (nb - 1)) == 0) {
          // Degree one: some minimum cover takes the neighbor.
          active &= ~(bit(u) | nb);
          ++cost;
          changed = true;
        }
      }
    }
    if (active == 0) {
      best_ = std::min(best_, cost);
      return;
    }
    if (cost + matching_bound(adj_, active) >= best_) return;

    int v = -1, deg = 0;
    for (std::uint64_t a = active; a; a &= a - 1) {
      const int u = lowest(a);
      const int d = std::popcount(adj_[u] & active);
      if (d > deg) {
        deg = d;
        v = u;
      }
    }
    if (deg == 2) {
      best_ = std::min(best_, cost + cycles_cover(active));
      return;
    }
    const std::uint64_t nb = adj_[v] & active;
    search(active & ~nb & ~bit(v), cost + std::popcount(nb));
    search(active & ~bit(v), cost + 1);
  }

  const AdjMasks& adj_;
  int best_ = 0;
};

// Depth-first search over (include lowest, exclude lowest) with the optimum
// known in advance. Leaves are visited in canonical order, so the first leaf
// within the optimum is the canonical cover.
class CanonicalSolver {
 public:
  CanonicalSolver(const AdjMasks& adj, int optimum)
      : adj_(adj), optimum_(optimum) {}

  std::uint64_t solve(std::uint64_t comp) {
    found_ = false;
    search(comp, 0, 0);
    return cover_;
  }

 private:
  void search(std::uint64_t active, std::uint64_t in, int in_size) {
    if (in_size + matching_bound(adj_, active) > optimum_) return;
    int v = -1;
    for (std::uint64_t a = active; a; a &= a - 1) {
      const int u = lowest(a);
      if (adj_[u] & active) {
        v = u;
        break;
      }
    }
    if (v < 0) {
      found_ = true;
      cover_ = in;
      return;
    }
    search(active & ~bit(v), in | bit(v), in_size + 1);
    if (found_) return;
    const std::uint64_t nb = adj_[v] & active;
    search(active & ~bit(v) & ~nb, in | nb, in_size + std::popcount(nb));
  }

  const AdjMasks& adj_;
  int optimum_;
  bool found_ = false;
  std::uint64_t cover_ = 0;
};

}  // namespace

SmallGraph::SmallGraph(const BaseGraph& g) : SmallGraph(g, g.all_edges()) {}

SmallGraph::SmallGraph(const BaseGraph& g, const EdgeSet& edges)
    : n_(static_cast<int>(g.num_vertices())) {
  if (g.num_vertices() > 64) {
    throw CapacityError("mask solver supports at most 64 vertices");
  }
  for (EdgeIndex e : edges) {
    edges_.emplace_back(g.edge(e).u, g.edge(e).v);
    edge_map_.push_back(e);
  }
  if (edges_.size() > 64) {
    throw CapacityError("mask realizations support at most 64 edges");
  }
}

void SmallGraph::adjacency(std::uint64_t edge_mask, AdjMasks& adj) const {
  std::fill(adj.begin(), adj.begin() + n_, 0);
  for (std::uint64_t m = edge_mask; m; m &= m - 1) {
    const auto& [u, v] = edges_[lowest(m)];
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
}

int mvc_size_masks(const AdjMasks& adj, int n) {
  int total = 0;
  SizeSolver solver(adj);
  for_each_component(adj, n, [&](std::uint64_t comp) {
    const int size = std::popcount(comp);
    if (size == 2) {
      total += 1;
    } else {
      total += solver.solve(comp);
    }
  });
  return total;
}

std::uint64_t canonical_cover_masks(const AdjMasks& adj, int n) {
  std::uint64_t cover = 0;
  SizeSolver sizer(adj);
  for_each_component(adj, n, [&](std::uint64_t comp) {
    if (std::popcount(comp) == 2) {
      cover |= bit(lowest(comp));
      return;
    }
    const int optimum = sizer.solve(comp);
    cover |= CanonicalSolver(adj, optimum).solve(comp);
  });
  return cover;
}

}  // namespace detail

namespace {

// Splits the realized graph into components, maps each to local ids in
// increasing global order and hands (adj, n, vertex list) to `f`.
template <typename F>
void for_each_large_component(const BaseGraph& g, const EdgeSet& present,
                              F&& f) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (EdgeIndex e : present) {
    const Vertex a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<Vertex>> members(n);
  std::vector<bool> touched(n, false);
  for (EdgeIndex e : present) {
    touched[g.edge(e).u] = true;
    touched[g.edge(e).v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (touched[v]) members[find(v)].push_back(v);
  }
  std::vector<int> local(n, -1);
  detail::AdjMasks adj{};
  for (Vertex root = 0; root < n; ++root) {
    const auto& vs = members[root];
    if (vs.empty()) continue;
    if (vs.size() > kBranchAndBoundCap) {
      throw CapacityError("realized component with " +
                          std::to_string(vs.size()) +
                          " vertices exceeds the exact solver cap of " +
                          std::to_string(kBranchAndBoundCap));
    }
    for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<int>(i);
    std::fill(adj.begin(), adj.end(), 0);
    for (Vertex v : vs) {
      for (const auto& inc : g.incident(v)) {
        if (present.contains(inc.edge)) {
          adj[local[v]] |= std::uint64_t{1} << local[inc.neighbor];
        }
      }
    }
    f(adj, static_cast<int>(vs.size()), vs);
  }
}

void build_adjacency(const BaseGraph& g, const EdgeSet& present,
                     detail::AdjMasks& adj) {
  std::fill(adj.begin(), adj.end(), 0);
  for (EdgeIndex e : present) {
    const auto& edge = g.edge(e);
    adj[edge.u] |= std::uint64_t{1} << edge.v;
    adj[edge.v] |= std::uint64_t{1} << edge.u;
  }
}

}  // namespace

CanonicalCover mvc_exact(const BaseGraph& g, const EdgeSet& present) {
  CanonicalCover out{VertexSet(g.num_vertices()), 0};
  if (g.num_vertices() <= 64) {
    detail::AdjMasks adj;
    build_adjacency(g, present, adj);
    const std::uint64_t mask = detail::canonical_cover_masks(
        adj, static_cast<int>(g.num_vertices()));
    for (std::uint64_t m = mask; m; m &= m - 1) out.cover.insert(std::countr_zero(m));
  } else {
    for_each_large_component(
        g, present,
        [&](const detail::AdjMasks& adj, int n, const std::vector<Vertex>& vs) {
          const std::uint64_t mask = detail::canonical_cover_masks(adj, n);
          for (std::uint64_t m = mask; m; m &= m - 1) {
            out.cover.insert(vs[std::countr_zero(m)]);
          }
        });
  }
  out.size = out.cover.size();
  return out;
}

CanonicalCover mvc_exact(const Realization& r) {
  return mvc_exact(r.base(), r.present());
}

std::size_t mvc_size(const BaseGraph& g, const EdgeSet& present) {
  if (g.num_vertices() <= 64) {
    detail::AdjMasks adj;
    build_adjacency(g, present, adj);
    return static_cast<std::size_t>(
        detail::mvc_size_masks(adj, static_cast<int>(g.num_vertices())));
  }
  std::size_t total = 0;
  for_each_large_component(
      g, present,
      [&](const detail::AdjMasks& adj, int n, const std::vector<Vertex>&) {
        total += static_cast<std::size_t>(detail::mvc_size_masks(adj, n));
      });
  return total;
}

std::size_t mvc_size(const Realization& r) {
  return mvc_size(r.base(), r.present());
}

bool is_vertex_cover(const BaseGraph& g, const EdgeSet& present,
                     const VertexSet& cover) {
  for (EdgeIndex e : present) {
    if (!cover.contains(g.edge(e).u) && !cover.contains(g.edge(e).v)) {
      return false;
    }
  }
  return true;
}

}  // namespace stochvc
