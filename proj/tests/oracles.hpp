#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination, clique enumeration or boundary builder.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "raagfp/graph.hpp"

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

// Textbook dense Gauss-Jordan rank over F_p with modular inverses.
inline std::size_t dense_rank(Dense a, std::int64_t p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && mod(a[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = inverse(a[rank][c], p);
    for (auto& x : a[rank]) x = mod(x * inv, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const std::int64_t f = mod(a[r][c], p);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = mod(a[r][j] - f * a[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

// All cliques (including the empty one) by checking every subset of `within`.
inline std::vector<std::vector<std::uint64_t>> brute_cliques(const raagfp::SimplicialGraph& g, std::uint64_t within) {
  std::vector<std::vector<std::uint64_t>> by_size(g.size() + 1);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.size()); ++s) {
    if ((s & ~within) != 0) continue;
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t u = 0; u < g.size() && ok; ++u) {
      if (!((s >> u) & 1U)) continue;
      ++size;
      for (std::size_t v = u + 1; v < g.size(); ++v) {
        if (((s >> v) & 1U) && !g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) by_size[size].push_back(s);
  }
  return by_size;
}

// Dense boundary matrix from size-k subsets to size-(k-1) subsets with sign
// (-1)^(position) for vertices accepted by keep.
template <typename Keep>
Dense dense_boundary(const std::vector<std::uint64_t>& domain, const std::vector<std::uint64_t>& codomain, Keep keep) {
  Dense d(codomain.size(), std::vector<std::int64_t>(domain.size(), 0));
  for (std::size_t c = 0; c < domain.size(); ++c) {
    int pos = 0;
    for (std::size_t v = 0; v < 64; ++v) {
      if (!((domain[c] >> v) & 1U)) continue;
      if (keep(v)) {
        const std::uint64_t face = domain[c] & ~(std::uint64_t{1} << v);
        for (std::size_t r = 0; r < codomain.size(); ++r) {
          if (codomain[r] == face) d[r][c] += (pos % 2 == 0) ? 1 : -1;
        }
      }
      ++pos;
    }
  }
  return d;
}

// Reduced homology of the flag complex on `within` over F_p, degrees -1..,
// straight from dense boundary ranks.
inline std::vector<std::size_t> reduced_homology(const raagfp::SimplicialGraph& g, std::uint64_t within,
                                                 std::int64_t p) {
  auto cl = brute_cliques(g, within);
  while (cl.size() > 1 && cl.back().empty()) cl.pop_back();
  std::vector<std::size_t> ranks(cl.size() + 1, 0);  // ranks[k]: boundary from size k to size k-1
  for (std::size_t k = 1; k < cl.size(); ++k) {
    ranks[k] = dense_rank(dense_boundary(cl[k], cl[k - 1], [](std::size_t) { return true; }), p);
  }
  std::vector<std::size_t> h;
  for (std::size_t k = 0; k < cl.size(); ++k) h.push_back(cl[k].size() - ranks[k] - ranks[k + 1]);
  return h;  // h[k] = reduced H_{k-1}
}

// H_n(C) for n = 1..clique number, from dense ranks on the full clique basis
// with faces restricted to the support.
inline std::vector<std::size_t> complex_homology(const raagfp::SimplicialGraph& g, std::uint64_t support,
                                                 std::int64_t p) {
  auto cl = brute_cliques(g, (std::uint64_t{1} << g.size()) - 1);
  while (cl.size() > 1 && cl.back().empty()) cl.pop_back();
  auto keep = [support](std::size_t v) { return ((support >> v) & 1U) != 0; };
  std::vector<std::size_t> ranks(cl.size() + 1, 0);
  for (std::size_t k = 1; k < cl.size(); ++k) ranks[k] = dense_rank(dense_boundary(cl[k], cl[k - 1], keep), p);
  std::vector<std::size_t> h;
  for (std::size_t n = 1; n < cl.size(); ++n) h.push_back(cl[n].size() - ranks[n] - ranks[n + 1]);
  return h;  // h[n-1] = H_n(C)
}

}  // namespace oracle
