#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "raagfp/catalog.hpp"
#include "raagfp/coabelian.hpp"
#include "raagfp/fpcheck.hpp"
#include "raagfp/gog.hpp"
#include "raagfp/graph.hpp"

// Seeded generators for the randomized suites.
namespace raagfp::random {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Erdos-Renyi graph: each pair is an edge with probability `density`.
inline SimplicialGraph graph(Rng& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return SimplicialGraph(catalog::numbered(n), e);
}

// 0/1 character with nonempty support.
inline Character binary_character(Rng& rng, std::size_t n, std::uint32_t p) {
  Character chi{p, std::vector<std::int64_t>(n, 0)};
  while (support_of(chi).empty()) {
    for (auto& x : chi.values) x = static_cast<std::int64_t>(uniform(rng, 0, 1));
  }
  return chi;
}

// Same zero pattern, fresh nonzero values in [-bound, bound], including
// multiples of p.
inline Character reseed_nonzero(Rng& rng, const Character& chi, std::int64_t bound) {
  Character out = chi;
  for (auto& x : out.values) {
    if (x == 0) continue;
    do {
      x = uniform_int(rng, -bound, bound);
    } while (x == 0);
  }
  return out;
}

inline CoabelianSpec matrix(Rng& rng, std::size_t k, std::size_t n, std::int64_t bound, std::uint32_t p) {
  CoabelianSpec m{p, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(n, 0))};
  for (auto& row : m.rows) {
    for (auto& x : row) x = uniform_int(rng, -bound, bound);
  }
  return m;
}

// Connected graph of finite groups with orders from {1,2,3,4,6,8}: a random
// spanning tree plus up to three extra edges (loops allowed). Edge orders
// are random common divisors of the endpoint orders.
inline GraphOfFiniteGroups graph_of_groups(Rng& rng, std::size_t max_vertices) {
  static constexpr std::int64_t kOrders[] = {1, 2, 3, 4, 6, 8};
  const std::size_t n = uniform(rng, 1, max_vertices);
  std::vector<GogVertex> verts;
  for (std::size_t i = 0; i < n; ++i) verts.push_back({"v" + std::to_string(i + 1), kOrders[uniform(rng, 0, 5)]});
  auto edge_order = [&](std::size_t a, std::size_t b) {
    const std::int64_t g = std::gcd(verts[a].order, verts[b].order);
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d <= g; ++d) {
      if (g % d == 0) divisors.push_back(d);
    }
    return divisors[uniform(rng, 0, divisors.size() - 1)];
  };
  std::vector<GogEdge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = uniform(rng, 0, i - 1);
    edges.push_back({"e" + std::to_string(edges.size() + 1), parent, i, edge_order(parent, i)});
  }
  const std::size_t extra = uniform(rng, 0, 3);
  for (std::size_t j = 0; j < extra; ++j) {
    const std::size_t a = uniform(rng, 0, n - 1);
    const std::size_t b = uniform(rng, 0, n - 1);
    edges.push_back({"e" + std::to_string(edges.size() + 1), a, b, edge_order(a, b)});
  }
  return GraphOfFiniteGroups(std::move(verts), std::move(edges));
}

}  // namespace raagfp::random
