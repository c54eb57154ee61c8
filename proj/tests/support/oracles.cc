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

#include "oracles.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

namespace oracle {
namespace {

std::vector<std::uint32_t> covered_by_subset(const BaseGraph& g) {
  const std::size_t n = g.num_vertices();
  const auto edges = g.edges();
  std::vector<std::uint32_t> cov(std::size_t{1} << n, 0);
  for (std::uint32_t c = 0; c < cov.size(); ++c) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (((c >> edges[i].u) | (c >> edges[i].v)) & 1U) mask |= 1U << i;
    }
    cov[c] = mask;
  }
  return cov;
}

bool lex_less(std::uint32_t a, std::uint32_t b) {
  std::vector<int> la, lb;
  for (int i = 0; i < 32; ++i) {
    if ((a >> i) & 1U) la.push_back(i);
    if ((b >> i) & 1U) lb.push_back(i);
  }
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(),
                                      lb.end());
}

// Vertex subsets sorted by (size, sorted vertex list).
std::vector<std::uint32_t> canonical_order(std::size_t n) {
  std::vector<std::uint32_t> order(std::size_t{1} << n);
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return lex_less(a, b);
  });
  return order;
}

std::uint32_t edge_mask(const EdgeSet& present) {
  std::uint32_t mask = 0;
  for (auto e : present) mask |= 1U << e;
  return mask;
}

void check_small(const BaseGraph& g) {
  if (g.num_vertices() > 20 || g.num_edges() > 20) {
    throw std::invalid_argument("oracle needs n <= 20 and m <= 20");
  }
}

double choose(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                  std::lgamma(n - k + 1.0));
}

}  // namespace

VertexSet canonical_cover(const BaseGraph& g, const EdgeSet& present) {
  check_small(g);
  const auto cov = covered_by_subset(g);
  const auto order = canonical_order(g.num_vertices());
  const std::uint32_t r = edge_mask(present);
  for (std::uint32_t c : order) {
    if ((cov[c] & r) == r) return VertexSet::from_mask(g.num_vertices(), c);
  }
  throw std::logic_error("unreachable: V covers everything");
}

std::vector<int> min_cover_table(const BaseGraph& g) {
  check_small(g);
  const std::size_t m = g.num_edges();
  const auto cov = covered_by_subset(g);
  std::vector<int> f(std::size_t{1} << m, std::numeric_limits<int>::max());
  for (std::uint32_t c = 0; c < cov.size(); ++c) {
    f[cov[c]] = std::min(f[cov[c]], std::popcount(c));
  }
  // f[R] = min over T ⊇ R of h[T].
  for (std::size_t e = 0; e < m; ++e) {
    for (std::uint32_t r = 0; r < f.size(); ++r) {
      if (!((r >> e) & 1U)) f[r] = std::min(f[r], f[r | (1U << e)]);
    }
  }
  return f;
}

std::vector<double> expected_over_subsets(const std::vector<int>& f,
                                          std::size_t m, double p) {
  std::vector<double> a(f.begin(), f.end());
  for (std::size_t e = 0; e < m; ++e) {
    for (std::uint32_t t = 0; t < a.size(); ++t) {
      if ((t >> e) & 1U) a[t] = p * a[t] + (1.0 - p) * a[t ^ (1U << e)];
    }
  }
  return a;
}

std::vector<double> all_objectives(const BaseGraph& g, double p) {
  check_small(g);
  const std::size_t n = g.num_vertices();
  const auto a =
      expected_over_subsets(min_cover_table(g), g.num_edges(), p);
  const auto edges = g.edges();
  std::vector<double> out(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < out.size(); ++s) {
    std::uint32_t inside = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(((s >> edges[i].u) | (s >> edges[i].v)) & 1U)) inside |= 1U << i;
    }
    out[s] = std::popcount(s) + a[inside];
  }
  return out;
}

double expected_mvc(const BaseGraph& g, double p) {
  return all_objectives(g, p)[0];
}

std::vector<double> membership(const BaseGraph& g, double p) {
  check_small(g);
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  const auto cov = covered_by_subset(g);
  const auto order = canonical_order(n);
  std::vector<double> out(n, 0.0);
  for (std::uint32_t r = 0; r < (1U << m); ++r) {
    const int k = std::popcount(r);
    const double w = std::pow(p, k) * std::pow(1.0 - p, m - k);
    for (std::uint32_t c : order) {
      if ((cov[c] & r) == r) {
        for (std::size_t v = 0; v < n; ++v) {
          if ((c >> v) & 1U) out[v] += w;
        }
        break;
      }
    }
  }
  return out;
}

std::vector<double> matched_probability(const BaseGraph& g, double p,
                                        const std::vector<Vertex>& prefix) {
  check_small(g);
  const std::size_t n = g.num_vertices(), m = g.num_edges();
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < prefix.size(); ++i) pos[prefix[i]] = static_cast<int>(i);
  std::vector<double> out(n, 0.0);
  for (std::uint32_t r = 0; r < (1U << m); ++r) {
    const int k = std::popcount(r);
    const double w = std::pow(p, k) * std::pow(1.0 - p, m - k);
    std::vector<char> matched(n, 0);
    std::function<void(std::size_t, double)> walk = [&](std::size_t i,
                                                        double prob) {
      if (i == prefix.size()) {
        for (std::size_t v = 0; v < n; ++v) {
          if (pos[v] < 0 && matched[v]) out[v] += w * prob;
        }
        return;
      }
      const Vertex v = prefix[i];
      std::vector<Vertex> options;
      if (!matched[v]) {
        for (const auto& inc : g.incident(v)) {
          const Vertex u = inc.neighbor;
          if (!((r >> inc.edge) & 1U) || matched[u]) continue;
          if (pos[u] >= 0 && pos[u] < static_cast<int>(i)) continue;
          options.push_back(u);
        }
      }
      if (options.empty()) {
        walk(i + 1, prob);
        return;
      }
      for (Vertex u : options) {
        matched[v] = matched[u] = 1;
        walk(i + 1, prob / static_cast<double>(options.size()));
        matched[v] = matched[u] = 0;
      }
    };
    walk(0, 1.0);
  }
  return out;
}

double binomial_tail(int k, double p, double t) {
  double total = 0.0;
  const double mean = k * p;
  for (int z = 0; z <= k; ++z) {
    if (std::abs(z - mean) >= t - 1e-9) {
      total += choose(k, z) * std::pow(p, z) * std::pow(1.0 - p, k - z);
    }
  }
  return total;
}

double binomial_tail_strict(int k, double p, double centre, double t,
                            double offset) {
  double total = 0.0;
  for (int z = 0; z <= k; ++z) {
    if (std::abs(z + offset - centre) > t + 1e-9) {
      total += choose(k, z) * std::pow(p, z) * std::pow(1.0 - p, k - z);
    }
  }
  return total;
}

EdgeSet edges_of_mask(const BaseGraph& g, std::uint64_t mask) {
  EdgeSet out(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if ((mask >> i) & 1U) out.insert(static_cast<stochvc::EdgeIndex>(i));
  }
  return out;
}

BaseGraph random_graph(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) pairs.emplace_back(u, v);
    }
  }
  return BaseGraph::from_edges(n, pairs);
}

}  // namespace oracle
