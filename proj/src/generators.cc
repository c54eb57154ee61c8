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

#include "stochvc/generators.h"

#include <charconv>
#include <cstdio>
#include <map>
#include <utility>
#include <vector>

#include "stochvc/errors.h"

namespace stochvc {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

constexpr std::size_t kMaxVertices = std::size_t{1} << 24;

const std::map<std::string, GeneratorKind, std::less<>>& kind_names() {
  static const std::map<std::string, GeneratorKind, std::less<>> names = {
      {"erdos_renyi", GeneratorKind::kErdosRenyi},
      {"random_bipartite", GeneratorKind::kRandomBipartite},
      {"star", GeneratorKind::kStar},
      {"clique", GeneratorKind::kClique},
      {"disjoint_edges", GeneratorKind::kDisjointEdges},
      {"planted_seed_instance", GeneratorKind::kPlantedSeed},
  };
  return names;
}

void check_density(double density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw ParameterError("density must lie in [0, 1]");
  }
}

void check_size(std::size_t n) {
  if (n > kMaxVertices) throw ParameterError("generator size too large");
}

std::size_t parse_count(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParameterError("generator parameter " + std::string(key) +
                         " must be a non-negative integer, got '" +
                         std::string(value) + "'");
  }
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const double out = std::stod(std::string(value), &used);
    if (used == value.size()) return out;
  } catch (const std::exception&) {
  }
  throw ParameterError("generator parameter " + std::string(key) +
                       " must be a number, got '" + std::string(value) + "'");
}

void validate(const GeneratorSpec& s) {
  switch (s.kind) {
    case GeneratorKind::kErdosRenyi:
      check_size(s.n);
      check_density(s.density);
      break;
    case GeneratorKind::kRandomBipartite:
      check_size(s.a + s.b);
      check_density(s.density);
      break;
    case GeneratorKind::kStar:
      check_size(s.d + 1);
      break;
    case GeneratorKind::kClique:
      check_size(s.n);
      break;
    case GeneratorKind::kDisjointEdges:
      check_size(2 * s.k);
      break;
    case GeneratorKind::kPlantedSeed:
      if (s.d == 0 || s.copies == 0) {
        throw ParameterError("planted_seed_instance needs d >= 1, copies >= 1");
      }
      check_size((s.d + 1) * s.copies);
      break;
  }
}

}  // namespace

GeneratorSpec GeneratorSpec::erdos_renyi(std::size_t n, double density) {
  GeneratorSpec s;
  s.kind = GeneratorKind::kErdosRenyi;
  s.n = n;
  s.density = density;
  return s;
}

GeneratorSpec GeneratorSpec::random_bipartite(std::size_t a, std::size_t b,
                                              double density) {
  GeneratorSpec s;
  s.kind = GeneratorKind::kRandomBipartite;
  s.a = a;
  s.b = b;
  s.density = density;
  return s;
}

GeneratorSpec GeneratorSpec::star(std::size_t d) {
  GeneratorSpec s;
  s.kind = GeneratorKind::kStar;
  s.d = d;
  return s;
}

GeneratorSpec GeneratorSpec::clique(std::size_t n) {
  GeneratorSpec s;
  s.kind = GeneratorKind::kClique;
  s.n = n;
  return s;
}

GeneratorSpec GeneratorSpec::disjoint_edges(std::size_t k) {
  GeneratorSpec s;
  s.kind = GeneratorKind::kDisjointEdges;
  s.k = k;
  return s;
}

GeneratorSpec GeneratorSpec::planted_seed_instance(std::size_t d,
                                                   std::size_t copies) {
  GeneratorSpec s;
  s.kind = GeneratorKind::kPlantedSeed;
  s.d = d;
  s.copies = copies;
  return s;
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const auto it = kind_names().find(name);
  if (it == kind_names().end()) {
    throw ParameterError("unknown generator '" + std::string(name) + "'");
  }
  GeneratorSpec s;
  s.kind = it->second;
  std::string_view rest =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError("generator parameter '" + std::string(item) +
                           "' is not key=value");
    }
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "n") {
      s.n = parse_count(key, value);
    } else if (key == "a") {
      s.a = parse_count(key, value);
    } else if (key == "b") {
      s.b = parse_count(key, value);
    } else if (key == "d") {
      s.d = parse_count(key, value);
    } else if (key == "k") {
      s.k = parse_count(key, value);
    } else if (key == "copies") {
      s.copies = parse_count(key, value);
    } else if (key == "density") {
      s.density = parse_real(key, value);
    } else {
      throw ParameterError("unknown generator parameter '" + std::string(key) +
                           "'");
    }
  }
  validate(s);
  return s;
}

std::string to_string(const GeneratorSpec& s) {
  char density[32];
  std::snprintf(density, sizeof density, "%.17g", s.density);
  switch (s.kind) {
    case GeneratorKind::kErdosRenyi:
      return "erdos_renyi:n=" + std::to_string(s.n) + ",density=" + density;
    case GeneratorKind::kRandomBipartite:
      return "random_bipartite:a=" + std::to_string(s.a) +
             ",b=" + std::to_string(s.b) + ",density=" + density;
    case GeneratorKind::kStar:
      return "star:d=" + std::to_string(s.d);
    case GeneratorKind::kClique:
      return "clique:n=" + std::to_string(s.n);
    case GeneratorKind::kDisjointEdges:
      return "disjoint_edges:k=" + std::to_string(s.k);
    case GeneratorKind::kPlantedSeed:
      return "planted_seed_instance:d=" + std::to_string(s.d) +
             ",copies=" + std::to_string(s.copies);
  }
  return {};
}

BaseGraph generate(const GeneratorSpec& spec, const SeedSpec& seed) {
  validate(spec);
  const SeedSpec stream = seed.substream(Stream::kGenerator);
  Pairs pairs;
  std::size_t n = 0;
  switch (spec.kind) {
    case GeneratorKind::kErdosRenyi: {
      n = spec.n;
      std::uint64_t index = 0;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++index) {
          if (draw_bernoulli(stream, 0, index, spec.density)) {
            pairs.emplace_back(u, v);
          }
        }
      }
      break;
    }
    case GeneratorKind::kRandomBipartite: {
      n = spec.a + spec.b;
      std::uint64_t index = 0;
      for (Vertex u = 0; u < spec.a; ++u) {
        for (std::size_t j = 0; j < spec.b; ++j, ++index) {
          if (draw_bernoulli(stream, 0, index, spec.density)) {
            pairs.emplace_back(u, static_cast<Vertex>(spec.a + j));
          }
        }
      }
      break;
    }
    case GeneratorKind::kStar:
      n = spec.d + 1;
      for (Vertex leaf = 1; leaf <= spec.d; ++leaf) pairs.emplace_back(0, leaf);
      break;
    case GeneratorKind::kClique:
      n = spec.n;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
      }
      break;
    case GeneratorKind::kDisjointEdges:
      n = 2 * spec.k;
      for (Vertex i = 0; i < spec.k; ++i) pairs.emplace_back(2 * i, 2 * i + 1);
      break;
    case GeneratorKind::kPlantedSeed:
      n = (spec.d + 1) * spec.copies;
      for (std::size_t c = 0; c < spec.copies; ++c) {
        const auto base = static_cast<Vertex>(c * (spec.d + 1));
        const auto centre = static_cast<Vertex>(base + spec.d);
        for (Vertex i = 0; i < spec.d; ++i) pairs.emplace_back(base + i, centre);
      }
      break;
  }
  return BaseGraph::from_edges(n, pairs);
}

}  // namespace stochvc
