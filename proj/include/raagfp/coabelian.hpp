#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "raagfp/error.hpp"
#include "raagfp/fpcheck.hpp"
#include "raagfp/graph.hpp"
#include "raagfp/matrix_fp.hpp"

namespace raagfp {

// N = ker(G -> Z_p^k) given by an integer k x |V| matrix whose column v is the
// image of vertex v.
struct CoabelianSpec {
  std::uint32_t p = 2;
  std::vector<std::vector<std::int64_t>> rows;

  std::size_t columns() const { return rows.empty() ? 0 : rows.front().size(); }
};

inline void require_matches(const SimplicialGraph& g, const CoabelianSpec& m) {
  if (m.rows.empty()) throw InputError("matrix has no rows");
  for (const auto& row : m.rows) {
    if (row.size() != g.size()) {
      throw InputError("matrix row has " + std::to_string(row.size()) + " entries for " +
                       std::to_string(g.size()) + " vertices");
    }
  }
}

namespace detail {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Rank over Q by fraction-free (Bareiss) elimination; every division is exact.
inline std::size_t bareiss_rank(IntMatrix a) {
  const std::size_t nrows = a.size();
  const std::size_t ncols = nrows == 0 ? 0 : a.front().size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t pivot = rank;
    while (pivot < nrows && a[pivot][c] == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        mpz_class t = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

// Matrix whose rows are the columns of m indexed by `cols` (k entries each).
inline IntMatrix columns_as_rows(const CoabelianSpec& m, VertexSet cols) {
  IntMatrix out;
  for (std::size_t v : cols.members()) {
    std::vector<mpz_class> r;
    r.reserve(m.rows.size());
    for (const auto& row : m.rows) r.emplace_back(static_cast<long>(row[v]));
    out.push_back(std::move(r));
  }
  return out;
}

inline std::size_t column_rank(const CoabelianSpec& m, VertexSet cols) {
  return bareiss_rank(columns_as_rows(m, cols));
}

// Basis of {x in Q^k : a x = 0} via reduced row echelon form.
inline std::vector<std::vector<mpq_class>> rational_kernel(const IntMatrix& a_int, std::size_t k) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& r : a_int) a.emplace_back(r.begin(), r.end());
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < a.size(); ++c) {
    std::size_t piv = row;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[row]);
    const mpq_class inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      const mpq_class f = a[i][c];
      for (std::size_t j = 0; j < k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < k; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<mpq_class> x(k, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

inline mpz_class dot_column(const std::vector<mpz_class>& lambda, const CoabelianSpec& m, std::size_t v) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < m.rows.size(); ++i) s += lambda[i] * static_cast<long>(m.rows[i][v]);
  return s;
}

}  // namespace detail

inline std::size_t rational_rank(const CoabelianSpec& m) {
  return detail::column_rank(m, VertexSet::first_n(m.columns()));
}

// Columns lying in the rational span of the columns in z.
inline VertexSet span_closure(const CoabelianSpec& m, VertexSet z) {
  const VertexSet all = VertexSet::first_n(m.columns());
  if (!z.subset_of(all)) throw InputError("vertex set references unknown column");
  const std::size_t r = detail::column_rank(m, z);
  VertexSet out = z;
  for (std::size_t v : (all - z).members()) {
    if (detail::column_rank(m, z | VertexSet::single(v)) == r) out.insert(v);
  }
  return out;
}

// Vertices killed by the rank-one quotient lambda . M, with an integer
// certificate lambda (primitive, so also a rational certificate).
struct ZeroPattern {
  VertexSet zero_set;
  std::vector<mpz_class> certificate;
};

inline bool verify_certificate(const CoabelianSpec& m, const ZeroPattern& z) {
  if (z.certificate.size() != m.rows.size()) return false;
  for (std::size_t v = 0; v < m.columns(); ++v) {
    const bool zero = detail::dot_column(z.certificate, m, v) == 0;
    if (zero != z.zero_set.contains(v)) return false;
  }
  return true;
}

// Certificate for a span-closed proper zero set: a generic point t^0 b_0 +
// t^1 b_1 + ... of the annihilator of the columns in z. For every column
// outside z the value is a nonzero polynomial in t, so some small t works.
inline ZeroPattern certify_pattern(const CoabelianSpec& m, VertexSet z) {
  const std::size_t k = m.rows.size();
  const auto basis = detail::rational_kernel(detail::columns_as_rows(m, z), k);
  const VertexSet outside = VertexSet::first_n(m.columns()) - z;
  if (basis.empty()) throw PreconditionError("zero set spans everything; no nonzero certificate");
  for (long t = 1;; ++t) {
    std::vector<mpq_class> lambda(k, 0);
    mpq_class power = 1;
    for (const auto& b : basis) {
      for (std::size_t i = 0; i < k; ++i) lambda[i] += power * b[i];
      power *= t;
    }
    mpz_class denom_lcm = 1;
    for (const auto& x : lambda) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> integral(k);
    mpz_class g = 0;
    for (std::size_t i = 0; i < k; ++i) {
      mpq_class scaled = lambda[i] * denom_lcm;
      integral[i] = scaled.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), integral[i].get_mpz_t());
    }
    if (g != 0) {
      for (auto& x : integral) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    bool generic = true;
    for (std::size_t v : outside.members()) {
      if (detail::dot_column(integral, m, v) == 0) {
        generic = false;
        break;
      }
    }
    if (generic) {
      ZeroPattern zp{z, std::move(integral)};
      if (!verify_certificate(m, zp)) throw PreconditionError("zero set is not span-closed");
      return zp;
    }
    if (static_cast<std::size_t>(t) > basis.size() * (outside.size() + 1)) {
      throw PreconditionError("zero set is not span-closed");
    }
  }
}

// Every zero pattern realised by a nonzero rank-one quotient: the span-closed
// proper column subsets (flats of the column matroid other than V), ordered
// by size then lexicographically. Flats are reached by closing F + {v} from
// the closure of the empty set.
inline std::vector<ZeroPattern> enumerate_patterns(const CoabelianSpec& m) {
  if (rational_rank(m) == 0) {
    throw FiniteQuotientError("matrix has rank 0 over Q: G/N is finite");
  }
  const VertexSet all = VertexSet::first_n(m.columns());
  auto key_less = [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  };
  std::set<VertexSet, decltype(key_less)> flats(key_less);
  std::vector<VertexSet> frontier{span_closure(m, VertexSet{})};
  flats.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (VertexSet f : frontier) {
      for (std::size_t v : (all - f).members()) {
        const VertexSet g = span_closure(m, f | VertexSet::single(v));
        if (flats.insert(g).second) next.push_back(g);
      }
    }
    frontier = std::move(next);
  }
  std::vector<ZeroPattern> out;
  for (VertexSet f : flats) {
    if (f != all) out.push_back(certify_pattern(m, f));
  }
  return out;
}

// 0/1 character whose zero set is z.
inline Character pattern_character(const CoabelianSpec& m, VertexSet z) {
  Character chi{m.p, std::vector<std::int64_t>(m.columns(), 1)};
  for (std::size_t v : z.members()) chi.values[v] = 0;
  return chi;
}

struct CoabelianFg {
  bool fg = true;
  std::optional<ZeroPattern> witness;
  std::vector<ZeroPattern> patterns;
};

// N is f.g. iff every N_0 >= N with G/N_0 = Z_p has f.g. kernel; each such
// N_0 is the kernel of a character whose support is V minus some pattern.
inline CoabelianFg fg_coabelian(const SimplicialGraph& g, const CoabelianSpec& m) {
  require_matches(g, m);
  checked_prime(m.p);
  CoabelianFg r;
  r.patterns = enumerate_patterns(m);
  for (const ZeroPattern& z : r.patterns) {
    const VertexSet support = g.all() - z.zero_set;
    if (!(is_connected(g, support) && is_dominant(g, support))) {
      r.fg = false;
      r.witness = z;
      break;
    }
  }
  return r;
}

struct CoabelianFpn {
  bool fp = true;
  std::optional<ZeroPattern> witness;
  std::vector<std::pair<ZeroPattern, FpnReport>> per_pattern;
};

inline CoabelianFpn fpn_coabelian(const SimplicialGraph& g, const CoabelianSpec& m, int n) {
  if (n < 1) throw PreconditionError("FP_n requires n >= 1");
  require_matches(g, m);
  checked_prime(m.p);
  CoabelianFpn r;
  for (ZeroPattern& z : enumerate_patterns(m)) {
    FpnReport rep = analyze_character(g, pattern_character(m, z.zero_set), n);
    const bool ok = rep.degrees.at(static_cast<std::size_t>(n - 1)).fp_complex;
    if (!ok && r.fp) {
      r.fp = false;
      r.witness = z;
    }
    r.per_pattern.emplace_back(std::move(z), std::move(rep));
  }
  return r;
}

struct FactorVerdict {
  VertexSet factor;
  bool is_clique = false;
  std::size_t restricted_rank = 0;
  bool meets_subgroup = false;
  std::string reason;
};

struct FullnessReport {
  std::vector<FactorVerdict> factors;
  bool full = false;
  std::string marker;  // set when full and finitely generated
};

inline constexpr const char* kFiniteByAbelianMarker =
    "full and finitely generated: G/N is finite-by-abelian";

// A non-clique join factor is non-abelian, and its commutator subgroup lies
// in every coabelian N. A clique factor on t vertices is Z_p^t and meets N
// nontrivially iff M restricted to its columns has rank < t.
inline FullnessReport is_full(const SimplicialGraph& g, const CoabelianSpec& m) {
  require_matches(g, m);
  FullnessReport r;
  r.full = true;
  for (VertexSet f : join_factors(g)) {
    FactorVerdict fv;
    fv.factor = f;
    fv.is_clique = is_clique(g, f);
    if (!fv.is_clique) {
      fv.meets_subgroup = true;
      fv.reason = "non-abelian factor; its commutator subgroup lies in N";
    } else {
      fv.restricted_rank = detail::column_rank(m, f);
      fv.meets_subgroup = fv.restricted_rank < f.size();
      fv.reason = "abelian factor of rank " + std::to_string(f.size()) + "; restricted matrix rank " +
                  std::to_string(fv.restricted_rank);
    }
    r.full = r.full && fv.meets_subgroup;
    r.factors.push_back(std::move(fv));
  }
  if (r.full && rational_rank(m) > 0 && fg_coabelian(g, m).fg) r.marker = kFiniteByAbelianMarker;
  return r;
}

}  // namespace raagfp
