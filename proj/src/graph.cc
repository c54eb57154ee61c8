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

#include "stochvc/graph.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "stochvc/errors.h"

namespace stochvc {
namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_uint(std::string_view token, T& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

BaseGraph BaseGraph::from_edges(
    std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  BaseGraph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a >= n || b >= n) {
      throw ValidationError("edge " + std::to_string(i) + " (" +
                            std::to_string(a) + "," + std::to_string(b) +
                            ") references a vertex outside [0," +
                            std::to_string(n) + ")");
    }
    if (a == b) {
      throw ValidationError("self-loop at vertex " + std::to_string(a));
    }
    if (a > b) std::swap(a, b);
    if (!seen.insert(pair_key(a, b)).second) {
      throw ValidationError("duplicate edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
    }
    g.edges_.push_back({a, b});
    ++degree[a];
    ++degree[b];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeIndex e = 0; e < g.edges_.size(); ++e) {
    const auto [u, v] = g.edges_[e];
    g.adjacency_[fill[u]++] = {v, e};
    g.adjacency_[fill[v]++] = {u, e};
  }
  return g;
}

BaseGraph BaseGraph::from_edges(
    std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(
                           edges.begin(), edges.size()));
}

std::size_t BaseGraph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<EdgeIndex> BaseGraph::find_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  for (const auto& inc : incident(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

BaseGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> n;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<std::size_t> pair_lines;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split_ws(body);
    if (!n) {
      std::size_t count = 0;
      if (tokens.size() != 1 || !parse_uint(tokens[0], count)) {
        throw ParseError(line_no, "expected vertex count, got '" +
                                      std::string(body) + "'");
      }
      n = count;
      continue;
    }
    Vertex u = 0, v = 0;
    if (tokens.size() != 2 || !parse_uint(tokens[0], u) ||
        !parse_uint(tokens[1], v)) {
      throw ParseError(line_no,
                       "expected 'u v' pair, got '" + std::string(body) + "'");
    }
    if (u >= *n || v >= *n) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": vertex id out of range [0," +
                            std::to_string(*n) + ")");
    }
    if (u == v) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": self-loop at vertex " + std::to_string(u));
    }
    pairs.emplace_back(u, v);
    pair_lines.push_back(line_no);
  }
  if (!n) throw ParseError(line_no + 1, "missing vertex count");
  try {
    return BaseGraph::from_edges(*n, pairs);
  } catch (const ValidationError&) {
    // Re-derive the offending line for the duplicate case.
    std::unordered_map<std::uint64_t, std::size_t> first;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [a, b] = pairs[i];
      if (a > b) std::swap(a, b);
      auto [it, inserted] = first.emplace(pair_key(a, b), pair_lines[i]);
      if (!inserted) {
        throw ValidationError("line " + std::to_string(pair_lines[i]) +
                              ": duplicate edge (" + std::to_string(a) + "," +
                              std::to_string(b) + "), first seen on line " +
                              std::to_string(it->second));
      }
    }
    throw;
  }
}

BaseGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string serialize_edge_list(const BaseGraph& g) {
  std::string out = std::to_string(g.num_vertices()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

LabeledGraph parse_labeled_edge_list(std::istream& in) {
  LabeledGraph result;
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  auto intern = [&](std::string_view label) {
    auto [it, inserted] =
        ids.emplace(std::string(label), static_cast<Vertex>(ids.size()));
    if (inserted) result.labels.emplace_back(label);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto tokens = split_ws(body);
    if (!header_seen) {
      header_seen = true;
      if (tokens.size() == 1) continue;
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'label label' pair, got '" +
                                    std::string(body) + "'");
    }
    const Vertex a = intern(tokens[0]);
    const Vertex b = intern(tokens[1]);
    pairs.emplace_back(a, b);
  }
  result.graph = BaseGraph::from_edges(result.labels.size(), pairs);
  return result;
}

InducedSubgraph induced_subgraph(const BaseGraph& g, const VertexSet& keep) {
  InducedSubgraph out;
  std::vector<Vertex> new_id(g.num_vertices(), 0);
  for (Vertex v : keep) {
    new_id[v] = static_cast<Vertex>(out.vertex_map.size());
    out.vertex_map.push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const auto edges = g.edges();
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    if (keep.contains(edges[e].u) && keep.contains(edges[e].v)) {
      pairs.emplace_back(new_id[edges[e].u], new_id[edges[e].v]);
      out.edge_map.push_back(e);
    }
  }
  out.graph = BaseGraph::from_edges(out.vertex_map.size(), pairs);
  return out;
}

std::size_t count_induced_edges(const BaseGraph& g, const VertexSet& keep) {
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (keep.contains(e.u) && keep.contains(e.v)) ++count;
  }
  return count;
}

EdgeSet induced_edge_set(const BaseGraph& g, const VertexSet& keep) {
  EdgeSet out(g.num_edges());
  const auto edges = g.edges();
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    if (keep.contains(edges[e].u) && keep.contains(edges[e].v)) out.insert(e);
  }
  return out;
}

VertexSet neighbors_within(const BaseGraph& g, Vertex v,
                           const VertexSet& restrict) {
  VertexSet out(g.num_vertices());
  for (const auto& inc : g.incident(v)) {
    if (inc.neighbor != v && restrict.contains(inc.neighbor)) {
      out.insert(inc.neighbor);
    }
  }
  return out;
}

EdgeSet edges_touching(const BaseGraph& g, const VertexSet& vs) {
  EdgeSet out(g.num_edges());
  const auto edges = g.edges();
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    if (vs.contains(edges[e].u) || vs.contains(edges[e].v)) out.insert(e);
  }
  return out;
}

std::vector<VertexSet> nontrivial_components(const BaseGraph& g,
                                             const VertexSet& keep) {
  std::vector<VertexSet> out;
  VertexSet seen(g.num_vertices());
  std::vector<Vertex> stack;
  for (Vertex root : keep) {
    if (seen.contains(root)) continue;
    VertexSet comp(g.num_vertices());
    bool has_edge = false;
    seen.insert(root);
    comp.insert(root);
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (!keep.contains(inc.neighbor)) continue;
        has_edge = true;
        if (!seen.contains(inc.neighbor)) {
          seen.insert(inc.neighbor);
          comp.insert(inc.neighbor);
          stack.push_back(inc.neighbor);
        }
      }
    }
    if (has_edge) out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace stochvc
