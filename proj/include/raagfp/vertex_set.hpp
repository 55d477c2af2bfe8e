#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace raagfp {

inline constexpr std::size_t kMaxVertices = 64;

// A subset of the vertex indices {0, ..., 63} of some ambient graph.
// Iteration is in increasing index order, which is the graph's vertex order.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(std::size_t v) { return VertexSet{std::uint64_t{1} << v}; }
  static constexpr VertexSet first_n(std::size_t n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(std::size_t v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }

  // Smallest member; undefined on the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  // Lexicographic order on the increasing member sequences.
  friend constexpr bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits_;
    std::uint64_t y = b.bits_;
    while (x != 0 && y != 0) {
      const int i = std::countr_zero(x);
      const int j = std::countr_zero(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace raagfp
