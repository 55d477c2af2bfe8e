#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "raagfp/error.hpp"

namespace raagfp {

using Residue = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Any prime below 2^31 is accepted so that products of residues fit in 64 bits.
inline std::uint32_t checked_prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
    throw InputError("p = " + std::to_string(p) + " is not a prime below 2^31");
  }
  return static_cast<std::uint32_t>(p);
}

inline Residue reduce_mod(std::int64_t x, std::uint32_t p) {
  const std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

inline Residue mul_mod(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p);
}

inline Residue sub_mod(Residue a, Residue b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<Residue>(static_cast<std::uint64_t>(a) + p - b);
}

inline Residue add_mod(Residue a, Residue b, std::uint32_t p) {
  return static_cast<Residue>((static_cast<std::uint64_t>(a) + b) % p);
}

// Sparse matrix over F_p stored by columns; each column is sorted by row and
// holds nonzero residues only.
class MatrixFp {
 public:
  using Entry = std::pair<std::size_t, Residue>;  // (row, value)

  MatrixFp() = default;
  MatrixFp(std::size_t rows, std::size_t cols, std::uint32_t p) : rows_(rows), p_(p), cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::uint32_t prime() const { return p_; }
  const std::vector<Entry>& column(std::size_t c) const { return cols_.at(c); }

  Residue at(std::size_t r, std::size_t c) const {
    const auto& col = cols_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), Entry{r, 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return (it != col.end() && it->first == r) ? it->second : 0;
  }

  // Adds `value` (any integer) to entry (r, c).
  void add(std::size_t r, std::size_t c, std::int64_t value) {
    if (r >= rows_ || c >= cols_.size()) throw PreconditionError("matrix index out of bounds");
    const Residue v = reduce_mod(value, p_);
    if (v == 0) return;
    auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), Entry{r, 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    if (it != col.end() && it->first == r) {
      it->second = add_mod(it->second, v, p_);
      if (it->second == 0) col.erase(it);
    } else {
      col.insert(it, Entry{r, v});
    }
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : cols_) n += col.size();
    return n;
  }
  bool is_zero() const { return nonzeros() == 0; }

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  std::size_t rows_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::vector<Entry>> cols_;
};

// Product a * b over F_p.
inline MatrixFp multiply(const MatrixFp& a, const MatrixFp& b) {
  if (a.cols() != b.rows() || a.prime() != b.prime()) {
    throw PreconditionError("matrix product shape or field mismatch");
  }
  const std::uint32_t p = a.prime();
  MatrixFp out(a.rows(), b.cols(), p);
  std::vector<Residue> acc(a.rows(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (const auto& [k, bv] : b.column(c)) {
      for (const auto& [r, av] : a.column(k)) {
        if (acc[r] == 0) touched.push_back(r);
        acc[r] = add_mod(acc[r], mul_mod(av, bv, p), p);
        // A sum may return to zero and be touched again; dedup below.
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t r : touched) {
      if (acc[r] != 0) out.add(r, c, acc[r]);
      acc[r] = 0;
    }
    touched.clear();
  }
  return out;
}

// Rank over F_p by fraction-free sparse elimination. Each step pivots on the
// active row with the fewest nonzeros, at its entry whose column is least
// occupied (a Markowitz-style minimal-fill choice).
inline std::size_t rank_fp(const MatrixFp& m) {
  using SparseRow = std::vector<std::pair<std::size_t, Residue>>;  // (col, value), sorted
  const std::uint32_t p = m.prime();
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) rows[r].emplace_back(c, v);
  }
  std::vector<std::unordered_set<std::size_t>> col_rows(m.cols());
  std::vector<bool> active(m.rows(), false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    active[r] = true;
    for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);
  }

  std::size_t rank = 0;
  SparseRow scratch;
  for (;;) {
    std::size_t pivot_row = rows.size();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (active[r] && rows[r].size() < best) {
        best = rows[r].size();
        pivot_row = r;
      }
    }
    if (pivot_row == rows.size()) break;

    const SparseRow prow = rows[pivot_row];
    std::size_t pivot_col = prow.front().first;
    Residue pivot_val = prow.front().second;
    for (const auto& [c, v] : prow) {
      if (col_rows[c].size() < col_rows[pivot_col].size()) {
        pivot_col = c;
        pivot_val = v;
      }
    }

    active[pivot_row] = false;
    for (const auto& [c, v] : prow) col_rows[c].erase(pivot_row);
    ++rank;

    const std::vector<std::size_t> targets(col_rows[pivot_col].begin(), col_rows[pivot_col].end());
    for (std::size_t r : targets) {
      SparseRow& row = rows[r];
      auto hit = std::find_if(row.begin(), row.end(), [&](const auto& e) { return e.first == pivot_col; });
      const Residue factor = hit->second;
      // row <- pivot_val * row - factor * prow, no division needed.
      scratch.clear();
      auto a = row.begin();
      auto b = prow.begin();
      while (a != row.end() || b != prow.end()) {
        if (b == prow.end() || (a != row.end() && a->first < b->first)) {
          scratch.emplace_back(a->first, mul_mod(pivot_val, a->second, p));
          ++a;
        } else if (a == row.end() || b->first < a->first) {
          const Residue v = sub_mod(0, mul_mod(factor, b->second, p), p);
          scratch.emplace_back(b->first, v);
          col_rows[b->first].insert(r);
          ++b;
        } else {
          const Residue v = sub_mod(mul_mod(pivot_val, a->second, p), mul_mod(factor, b->second, p), p);
          if (v != 0) {
            scratch.emplace_back(a->first, v);
          } else {
            col_rows[a->first].erase(r);
          }
          ++a;
          ++b;
        }
      }
      row.swap(scratch);
      if (row.empty()) active[r] = false;
    }
  }
  return rank;
}

}  // namespace raagfp
