#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "raagfp/graph.hpp"

// Named graph families used by the corpus, the tests and the verify harness.
namespace raagfp::catalog {

inline std::vector<std::string> numbered(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

inline SimplicialGraph edgeless(std::size_t n) { return SimplicialGraph(numbered(n), {}); }

inline SimplicialGraph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return SimplicialGraph(numbered(n), e);
}

inline SimplicialGraph path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return SimplicialGraph(numbered(n), e);
}

inline SimplicialGraph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimplicialGraph(numbered(n), e);
}

// Hub v1 joined to n leaves.
inline SimplicialGraph star(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return SimplicialGraph(numbered(leaves + 1), e);
}

// Join: disjoint union plus every edge between the two sides. Names of b get
// a prime appended when they clash with a.
inline SimplicialGraph join(const SimplicialGraph& a, const SimplicialGraph& b) {
  std::vector<std::string> names = a.names();
  for (std::string n : b.names()) {
    while (std::find(names.begin(), names.end(), n) != names.end()) n += "'";
    names.push_back(n);
  }
  std::vector<std::pair<std::size_t, std::size_t>> e = a.edges();
  const std::size_t off = a.size();
  for (const auto& [u, v] : b.edges()) e.emplace_back(u + off, v + off);
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = 0; v < b.size(); ++v) e.emplace_back(u, v + off);
  }
  return SimplicialGraph(std::move(names), e);
}

inline SimplicialGraph complete_bipartite(std::size_t m, std::size_t n) {
  return join(SimplicialGraph(numbered(m, "a"), {}), SimplicialGraph(numbered(n, "b"), {}));
}

// Complement of three disjoint edges; its flag complex is the octahedral 2-sphere.
inline SimplicialGraph octahedron() {
  SimplicialGraph three_edges(numbered(6), {{0, 1}, {2, 3}, {4, 5}});
  return complement(three_edges);
}

// Cone over g: a new last vertex adjacent to everything.
inline SimplicialGraph cone(const SimplicialGraph& g) {
  return join(g, SimplicialGraph({"apex"}, {}));
}

// Graph on n vertices whose edges are the set bits of `code` over the pairs
// (0,1), (0,2), ..., (n-2,n-1).
inline SimplicialGraph from_edge_code(std::size_t n, std::uint64_t code) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1U) e.emplace_back(u, v);
    }
  }
  return SimplicialGraph(numbered(n), e);
}

// Smallest edge code over all relabellings.
inline std::uint64_t canonical_code(std::size_t n, std::uint64_t code) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++bit) adj[u][v] = adj[v][u] = ((code >> bit) & 1U) != 0;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = code;
  do {
    std::uint64_t c = 0;
    bit = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v, ++bit) {
        if (adj[perm[u]][perm[v]]) c |= std::uint64_t{1} << bit;
      }
    }
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One representative per isomorphism class of connected graphs on n vertices
// (brute force; intended for n <= 7).
inline std::vector<SimplicialGraph> connected_graphs(std::size_t n) {
  std::vector<SimplicialGraph> out;
  if (n == 0) return out;
  const std::size_t pairs = n * (n - 1) / 2;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const std::uint64_t canon = canonical_code(n, code);
    if (!seen.insert(canon).second) continue;
    SimplicialGraph g = from_edge_code(n, canon);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace raagfp::catalog
