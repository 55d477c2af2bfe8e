#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "raagfp/chain_complex.hpp"
#include "raagfp/graph.hpp"
#include "raagfp/matrix_fp.hpp"

namespace raagfp {

// Flag complex of the subgraph induced on `vertices`: one (k-1)-simplex per
// nonempty k-clique. simplices[d] lists the d-simplices lexicographically.
struct FlagComplex {
  VertexSet vertices;
  std::vector<std::vector<Clique>> simplices;

  bool empty() const { return simplices.empty(); }
  int dimension() const { return static_cast<int>(simplices.size()) - 1; }
  std::size_t count(int d) const {
    return d >= 0 && d <= dimension() ? simplices[static_cast<std::size_t>(d)].size() : 0;
  }
};

inline FlagComplex flag_complex(const SimplicialGraph& g, VertexSet within) {
  CliquesBySize cliques = enumerate_cliques(g, within.size(), within);
  FlagComplex k{within, {}};
  for (std::size_t size = 1; size < cliques.size(); ++size) k.simplices.push_back(std::move(cliques[size]));
  return k;
}

inline FlagComplex flag_complex(const SimplicialGraph& g) { return flag_complex(g, g.all()); }

// Link of the clique s in the flag complex of g, intersected with the flag
// complex on `support`: the flag complex on the common neighbours of s that
// lie in support. For s empty this is the flag complex on support.
inline FlagComplex link_complex(const SimplicialGraph& g, VertexSet support, Clique s) {
  require_subset(g, support);
  require_subset(g, s.members);
  if (!is_clique(g, s.members)) throw InputError("link of a vertex set that is not a clique");
  VertexSet common = support;
  for (std::size_t v : s.members.members()) common = common & g.neighbors(v);
  return flag_complex(g, common);
}

inline ChainComplexFp simplicial_chain_complex(const FlagComplex& k, std::uint32_t p, bool augmented) {
  checked_prime(p);
  std::vector<std::vector<Clique>> basis;
  if (augmented) basis.push_back({Clique{}});
  for (const auto& layer : k.simplices) basis.push_back(layer);
  if (basis.empty()) basis.emplace_back();  // non-augmented empty complex: C_0 = 0

  std::vector<MatrixFp> boundaries;
  boundaries.emplace_back(0, basis[0].size(), p);
  for (std::size_t i = 1; i < basis.size(); ++i) {
    boundaries.push_back(clique_boundary(basis[i], basis[i - 1], p, [](std::size_t) { return true; }));
  }
  return ChainComplexFp(p, augmented ? -1 : 0, std::move(basis), std::move(boundaries));
}

// Reduced homology over F_p in degrees -1..dim; degree -1 is 1 exactly for
// the empty complex.
inline HomologyDims reduced_homology(const FlagComplex& k, std::uint32_t p) {
  return simplicial_chain_complex(k, p, true).homology();
}

// Reduced homology vanishes in degrees -1..level. Level -1 means nonempty.
inline bool is_k_acyclic(const HomologyDims& reduced, int level) {
  for (int i = -1; i <= level; ++i) {
    if (reduced.at(i) != 0) return false;
  }
  return true;
}

inline bool is_k_acyclic(const FlagComplex& k, std::uint32_t p, int level) {
  if (level < -1) throw PreconditionError("acyclicity level must be >= -1");
  return is_k_acyclic(reduced_homology(k, p), level);
}

}  // namespace raagfp
