#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raagfp/error.hpp"
#include "raagfp/graph.hpp"
#include "raagfp/matrix_fp.hpp"

namespace raagfp {

// Dimensions indexed by degree, zero outside the stored range.
struct HomologyDims {
  int lo = 0;
  std::vector<std::size_t> dims;

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  std::size_t at(int degree) const {
    if (degree < lo || degree > hi()) return 0;
    return dims[static_cast<std::size_t>(degree - lo)];
  }
  bool all_zero() const {
    for (std::size_t d : dims) {
      if (d != 0) return false;
    }
    return true;
  }
  friend bool operator==(const HomologyDims& a, const HomologyDims& b) {
    const int lo = std::min(a.lo, b.lo);
    const int hi = std::max(a.hi(), b.hi());
    for (int i = lo; i <= hi; ++i) {
      if (a.at(i) != b.at(i)) return false;
    }
    return true;
  }
};

// Finite chain complex of F_p-vector spaces over degrees [lo, hi] whose basis
// elements are labelled by cliques. boundary(n) maps degree n to degree n-1;
// boundary(lo) is the zero map to the (absent) degree lo-1.
class ChainComplexFp {
 public:
  ChainComplexFp(std::uint32_t p, int lo, std::vector<std::vector<Clique>> basis,
                 std::vector<MatrixFp> boundaries)
      : p_(p), lo_(lo), basis_(std::move(basis)), boundaries_(std::move(boundaries)) {
    if (basis_.size() != boundaries_.size()) throw PreconditionError("one boundary per degree required");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const std::size_t below = i == 0 ? 0 : basis_[i - 1].size();
      if (boundaries_[i].rows() != below || boundaries_[i].cols() != basis_[i].size() ||
          boundaries_[i].prime() != p_) {
        throw PreconditionError("boundary shape does not match adjacent dimensions");
      }
    }
  }

  std::uint32_t prime() const { return p_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(basis_.size()) - 1; }

  std::size_t dim(int degree) const {
    if (degree < lo_ || degree > hi()) return 0;
    return basis_[index(degree)].size();
  }
  const std::vector<Clique>& basis(int degree) const { return basis_.at(index(degree)); }
  const MatrixFp& boundary(int degree) const { return boundaries_.at(index(degree)); }

  // Mutable access for fault-injection fixtures.
  MatrixFp& boundary_mut(int degree) { return boundaries_.at(index(degree)); }

  // First degree n with boundary(n-1) * boundary(n) != 0, if any.
  std::optional<int> first_nonzero_square() const {
    for (int n = lo_ + 1; n <= hi(); ++n) {
      if (!multiply(boundary(n - 1), boundary(n)).is_zero()) return n;
    }
    return std::nullopt;
  }
  bool squares_to_zero() const { return !first_nonzero_square().has_value(); }

  std::vector<std::size_t> boundary_ranks() const {
    std::vector<std::size_t> ranks;
    ranks.reserve(boundaries_.size());
    for (const auto& d : boundaries_) ranks.push_back(rank_fp(d));
    return ranks;
  }

  // dim H_n = dim C_n - rank d_n - rank d_{n+1}.
  HomologyDims homology() const {
    const auto ranks = boundary_ranks();
    HomologyDims h{lo_, std::vector<std::size_t>(basis_.size(), 0)};
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const std::size_t above = i + 1 < ranks.size() ? ranks[i + 1] : 0;
      h.dims[i] = basis_[i].size() - ranks[i] - above;
    }
    return h;
  }

 private:
  std::size_t index(int degree) const {
    if (degree < lo_ || degree > hi()) throw PreconditionError("degree outside complex");
    return static_cast<std::size_t>(degree - lo_);
  }

  std::uint32_t p_;
  int lo_;
  std::vector<std::vector<Clique>> basis_;
  std::vector<MatrixFp> boundaries_;
};

// Alternating-face boundary between clique bases: for sigma = (v_1 < ... < v_k)
// the column of sigma holds (-1)^(i-1) at the row of sigma \ {v_i}, for every
// position i whose vertex passes `keep_face`. Faces must be in `codomain`.
template <typename KeepFace>
MatrixFp clique_boundary(const std::vector<Clique>& domain, const std::vector<Clique>& codomain,
                         std::uint32_t p, KeepFace keep_face) {
  std::unordered_map<std::uint64_t, std::size_t> row_of;
  row_of.reserve(codomain.size());
  for (std::size_t r = 0; r < codomain.size(); ++r) row_of.emplace(codomain[r].members.bits(), r);

  MatrixFp d(codomain.size(), domain.size(), p);
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const auto verts = domain[c].members.members();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (!keep_face(verts[i])) continue;
      const VertexSet face = domain[c].members - VertexSet::single(verts[i]);
      auto it = row_of.find(face.bits());
      if (it == row_of.end()) throw PreconditionError("face missing from codomain basis");
      d.add(it->second, c, i % 2 == 0 ? 1 : -1);
    }
  }
  return d;
}

}  // namespace raagfp
