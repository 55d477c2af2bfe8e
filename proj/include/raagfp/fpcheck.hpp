#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "raagfp/chain_complex.hpp"
#include "raagfp/error.hpp"
#include "raagfp/flag_homology.hpp"
#include "raagfp/graph.hpp"
#include "raagfp/matrix_fp.hpp"

namespace raagfp {

// A character G -> Z_p given by one integer per vertex (in vertex order).
// Only the zero pattern and the p-adic valuations matter.
struct Character {
  std::uint32_t p = 2;
  std::vector<std::int64_t> values;

  friend bool operator==(const Character&, const Character&) = default;
};

inline void require_defined_on(const SimplicialGraph& g, const Character& chi) {
  if (chi.values.size() != g.size()) {
    throw InputError("character has " + std::to_string(chi.values.size()) + " values for " +
                     std::to_string(g.size()) + " vertices");
  }
}

// Vertices with nonzero value (exact integer zero test).
inline VertexSet support_of(const Character& chi) {
  VertexSet s;
  for (std::size_t v = 0; v < chi.values.size(); ++v) {
    if (chi.values[v] != 0) s.insert(v);
  }
  return s;
}

inline SimplicialGraph support_graph(const SimplicialGraph& g, const Character& chi) {
  require_defined_on(g, chi);
  return induced_subgraph(g, support_of(chi));
}

struct SurjectivityCheck {
  bool surjective = false;
  Character normalized;
  // Number of factors of p divided out of every value (0 if untouched).
  unsigned rescale_exponent = 0;
};

inline SurjectivityCheck check_surjective(const SimplicialGraph& g, const Character& chi) {
  require_defined_on(g, chi);
  SurjectivityCheck out{false, chi, 0};
  if (support_of(chi).empty()) return out;
  const auto p = static_cast<std::int64_t>(chi.p);
  auto all_divisible = [&](const std::vector<std::int64_t>& vals) {
    for (std::int64_t x : vals) {
      if (x % p != 0) return false;
    }
    return true;
  };
  out.surjective = !all_divisible(chi.values);
  while (all_divisible(out.normalized.values)) {
    for (std::int64_t& x : out.normalized.values) x /= p;
    ++out.rescale_exponent;
  }
  return out;
}

// Surjective representative with the same kernel; throws for chi == 0.
inline Character require_epimorphism(const SimplicialGraph& g, const Character& chi) {
  SurjectivityCheck c = check_surjective(g, chi);
  if (support_of(chi).empty()) {
    throw NotEpimorphismError("character is identically zero; not an epimorphism onto Z_p");
  }
  return c.normalized;
}

struct FgVerdict {
  bool fg = false;
  bool connected = false;
  bool dominant = false;
};

inline FgVerdict fg_verdict(const SimplicialGraph& g, const Character& chi) {
  const Character n = require_epimorphism(g, chi);
  const VertexSet support = support_of(n);
  FgVerdict v;
  v.connected = is_connected(g, support);
  v.dominant = is_dominant(g, support);
  v.fg = v.connected && v.dominant;
  return v;
}

// Kernel finitely generated iff the support subgraph is connected and dominant.
inline bool is_fg(const SimplicialGraph& g, const Character& chi) { return fg_verdict(g, chi).fg; }

// The complex C: degree n >= 0 has a basis vector per clique of SIZE n (the
// empty clique in degree 0), with d(c_sigma) = sum over support vertices v_i
// of sigma of (-1)^(i-1) c_{sigma \ v_i}. Degree -1 is a copy of F_p; the map
// from degree 0 sends c_empty to 1 only when the support is empty, which is
// the only case where that keeps d o d = 0.
inline ChainComplexFp build_complex_C(const SimplicialGraph& g, const Character& chi) {
  require_defined_on(g, chi);
  const std::uint32_t p = checked_prime(chi.p);
  const VertexSet support = support_of(chi);
  CliquesBySize cliques = enumerate_cliques(g, g.size());

  std::vector<std::vector<Clique>> basis;
  basis.push_back({Clique{}});
  for (auto& layer : cliques) basis.push_back(std::move(layer));

  std::vector<MatrixFp> boundaries;
  boundaries.emplace_back(0, 1, p);
  MatrixFp bottom(1, 1, p);
  if (support.empty()) bottom.add(0, 0, 1);
  boundaries.push_back(std::move(bottom));
  auto in_support = [support](std::size_t v) { return support.contains(v); };
  for (std::size_t i = 2; i < basis.size(); ++i) {
    boundaries.push_back(clique_boundary(basis[i], basis[i - 1], p, in_support));
  }
  return ChainComplexFp(p, -1, std::move(basis), std::move(boundaries));
}

// H_n(C) for n = 1..clique number, returned with lo = 1.
inline HomologyDims complex_C_homology(const SimplicialGraph& g, const Character& chi) {
  const HomologyDims full = build_complex_C(g, chi).homology();
  HomologyDims h{1, {}};
  for (int n = 1; n <= full.hi(); ++n) h.dims.push_back(full.at(n));
  return h;
}

struct ComplexVerdict {
  bool fp = false;
  HomologyDims h;  // H_n(C), n >= 1
};

// FP_n iff H_i(C) = 0 for 1 <= i <= n (degrees past the clique number vanish).
inline ComplexVerdict fp_via_complex(const SimplicialGraph& g, const Character& chi, int n) {
  if (n < 1) throw PreconditionError("FP_n requires n >= 1");
  const Character c = require_epimorphism(g, chi);
  ComplexVerdict v{true, complex_C_homology(g, c)};
  for (int i = 1; i <= n; ++i) {
    if (v.h.at(i) != 0) v.fp = false;
  }
  return v;
}

struct LinkDetail {
  Clique clique;  // S, disjoint from the support
  int level;      // n - 1 - |S| >= -1
  HomologyDims reduced;
  bool acyclic;
};

struct LinksVerdict {
  bool fp = false;
  std::vector<LinkDetail> details;
};

// Cliques of g that avoid the support, grouped by size (empty clique first).
inline CliquesBySize cliques_off_support(const SimplicialGraph& g, VertexSet support, std::size_t max_size) {
  return enumerate_cliques(g, max_size, g.all() - support);
}

// FP_n iff lk(S) restricted to the support is (n-1-|S|)-acyclic for every
// clique S avoiding the support with |S| <= n.
inline LinksVerdict fp_via_links(const SimplicialGraph& g, const Character& chi, int n) {
  if (n < 1) throw PreconditionError("FP_n requires n >= 1");
  const Character c = require_epimorphism(g, chi);
  const VertexSet support = support_of(c);
  LinksVerdict v{true, {}};
  for (const auto& layer : cliques_off_support(g, support, static_cast<std::size_t>(n))) {
    for (const Clique& s : layer) {
      const int level = n - 1 - static_cast<int>(s.size());
      const FlagComplex link = link_complex(g, support, s);
      HomologyDims h = reduced_homology(link, c.p);
      const bool ok = is_k_acyclic(h, level);
      v.fp = v.fp && ok;
      v.details.push_back({s, level, std::move(h), ok});
    }
  }
  return v;
}

// Reduced homology of lk(S) for every clique S avoiding the support.
struct LinkTable {
  std::vector<Clique> cliques;
  std::vector<HomologyDims> reduced;

  std::size_t dim(std::size_t idx, int degree) const { return reduced[idx].at(degree); }
};

inline LinkTable link_table(const SimplicialGraph& g, const Character& chi) {
  const VertexSet support = support_of(chi);
  LinkTable t;
  for (const auto& layer : cliques_off_support(g, support, g.size())) {
    for (const Clique& s : layer) {
      t.cliques.push_back(s);
      t.reduced.push_back(reduced_homology(link_complex(g, support, s), chi.p));
    }
  }
  return t;
}

struct DecompositionRow {
  int degree = 0;
  std::size_t complex_dim = 0;  // dim H_n(C) by elimination
  std::size_t link_sum = 0;     // sum_S dim H~_{n-1-|S|}(lk S)
  friend bool operator==(const DecompositionRow&, const DecompositionRow&) = default;
};

struct DecompositionReport {
  std::vector<DecompositionRow> rows;
  bool pass = true;
  friend bool operator==(const DecompositionReport&, const DecompositionReport&) = default;
};

// Checks dim H_n(C) = sum over cliques S avoiding the support of
// dim H~_{n-1-|S|}(lk S), for n = 1..clique number. No surjectivity needed.
inline DecompositionReport decomposition_check(const SimplicialGraph& g, const Character& chi) {
  require_defined_on(g, chi);
  const HomologyDims hc = complex_C_homology(g, chi);
  const LinkTable links = link_table(g, chi);
  DecompositionReport r;
  for (int n = 1; n <= hc.hi(); ++n) {
    DecompositionRow row{n, hc.at(n), 0};
    for (std::size_t i = 0; i < links.cliques.size(); ++i) {
      const int level = n - 1 - static_cast<int>(links.cliques[i].size());
      if (level >= -1) row.link_sum += links.dim(i, level);
    }
    r.pass = r.pass && row.complex_dim == row.link_sum;
    r.rows.push_back(row);
  }
  return r;
}

// Largest n with FP_n; infinite when every H_n(C), n >= 1, vanishes.
struct FpLevel {
  bool infinite = false;
  std::size_t value = 0;

  static FpLevel inf() { return {true, 0}; }
  static FpLevel finite(std::size_t n) { return {false, n}; }
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
  friend bool operator==(const FpLevel&, const FpLevel&) = default;
};

inline FpLevel max_fp_from(const HomologyDims& complex_h) {
  for (int n = 1; n <= complex_h.hi(); ++n) {
    if (complex_h.at(n) != 0) return FpLevel::finite(static_cast<std::size_t>(n - 1));
  }
  return FpLevel::inf();
}

inline FpLevel max_fp(const SimplicialGraph& g, const Character& chi) {
  const Character c = require_epimorphism(g, chi);
  return max_fp_from(complex_C_homology(g, c));
}

struct DegreeReport {
  int n = 0;
  bool fp_links = false;
  bool fp_complex = false;
  std::size_t dim_hn_c = 0;
  // (S, dim H~_{n-1-|S|}(lk S)) for every clique S avoiding the support
  // with |S| <= n.
  std::vector<std::pair<Clique, std::size_t>> per_clique;
  friend bool operator==(const DegreeReport&, const DegreeReport&) = default;
};

struct FpnReport {
  VertexSet support;
  bool connected = false;
  bool dominant = false;
  bool fg = false;
  std::vector<DegreeReport> degrees;
  FpLevel max_fp;
  unsigned rescale_exponent = 0;  // > 0 when chi was divided by p^t
  DecompositionReport decomposition;
  bool routes_agree = true;
  friend bool operator==(const FpnReport&, const FpnReport&) = default;
};

// Full single-character analysis through degree max_n; max_n <= 0 selects
// the clique number of g.
inline FpnReport analyze_character(const SimplicialGraph& g, const Character& chi, int max_n = 0) {
  const SurjectivityCheck sc = check_surjective(g, chi);
  const Character c = require_epimorphism(g, chi);
  const HomologyDims hc = complex_C_homology(g, c);
  const LinkTable links = link_table(g, c);
  if (max_n <= 0) max_n = std::max(1, hc.hi());

  FpnReport r;
  r.support = support_of(c);
  const FgVerdict fgv = fg_verdict(g, c);
  r.connected = fgv.connected;
  r.dominant = fgv.dominant;
  r.fg = fgv.fg;
  r.rescale_exponent = sc.rescale_exponent;
  r.max_fp = max_fp_from(hc);

  bool links_ok = true;
  bool complex_ok = true;
  for (int n = 1; n <= max_n; ++n) {
    DegreeReport d;
    d.n = n;
    d.dim_hn_c = hc.at(n);
    for (std::size_t i = 0; i < links.cliques.size(); ++i) {
      const int level = n - 1 - static_cast<int>(links.cliques[i].size());
      if (level < -1) continue;
      d.per_clique.emplace_back(links.cliques[i], links.dim(i, level));
      if (!is_k_acyclic(links.reduced[i], level)) links_ok = false;
    }
    complex_ok = complex_ok && d.dim_hn_c == 0;
    d.fp_links = links_ok;
    d.fp_complex = complex_ok;
    r.routes_agree = r.routes_agree && d.fp_links == d.fp_complex;
    r.degrees.push_back(std::move(d));
  }
  r.decomposition = decomposition_check(g, c);
  return r;
}

}  // namespace raagfp
