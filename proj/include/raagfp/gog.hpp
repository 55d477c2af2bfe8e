#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raagfp/error.hpp"

namespace raagfp {

struct GogVertex {
  std::string id;
  std::int64_t order = 1;
  friend bool operator==(const GogVertex&, const GogVertex&) = default;
};

struct GogEdge {
  std::string id;
  std::size_t d0 = 0;
  std::size_t d1 = 0;
  std::int64_t order = 1;

  bool is_loop() const { return d0 == d1; }
  friend bool operator==(const GogEdge&, const GogEdge&) = default;
};

// Finite connected graph of finite groups, each group recorded by its order.
// Loops and multiple edges are allowed; every edge order divides the orders
// at both of its endpoints.
class GraphOfFiniteGroups {
 public:
  GraphOfFiniteGroups(std::vector<GogVertex> vertices, std::vector<GogEdge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.empty()) throw InputError("graph of groups has no vertices");
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& v : vertices_) {
      if (v.order < 1) throw InputError("vertex '" + v.id + "' has non-positive order");
      if (!seen.emplace(v.id, 0).second) throw InputError("duplicate vertex id '" + v.id + "'");
    }
    seen.clear();
    for (const auto& e : edges_) {
      if (!seen.emplace(e.id, 0).second) throw InputError("duplicate edge id '" + e.id + "'");
      if (e.d0 >= vertices_.size() || e.d1 >= vertices_.size()) {
        throw InputError("edge '" + e.id + "' references unknown vertex");
      }
      if (e.order < 1) throw InputError("edge '" + e.id + "' has non-positive order");
      if (vertices_[e.d0].order % e.order != 0 || vertices_[e.d1].order % e.order != 0) {
        throw InputError("edge '" + e.id + "' order does not divide its endpoint orders");
      }
    }
    if (!connected()) throw InputError("graph of groups is not connected");
  }

  const std::vector<GogVertex>& vertices() const { return vertices_; }
  const std::vector<GogEdge>& edges() const { return edges_; }
  std::int64_t vertex_order(std::size_t v) const { return vertices_.at(v).order; }

  friend bool operator==(const GraphOfFiniteGroups&, const GraphOfFiniteGroups&) = default;

 private:
  bool connected() const {
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = vertices_.size();
    for (const auto& e : edges_) {
      const std::size_t a = find(e.d0);
      const std::size_t b = find(e.d1);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    return components == 1;
  }

  std::vector<GogVertex> vertices_;
  std::vector<GogEdge> edges_;
};

// Reduced: no non-loop edge group equals either endpoint group, i.e. no
// non-loop edge order equals an endpoint order. Loops are exempt.
inline bool is_reduced(const GraphOfFiniteGroups& x) {
  for (const auto& e : x.edges()) {
    if (e.is_loop()) continue;
    if (e.order == x.vertex_order(e.d0) || e.order == x.vertex_order(e.d1)) return false;
  }
  return true;
}

// Collapses offending non-loop edges, first in edge order, until reduced.
// If the edge group equals the d0 group the merged vertex carries the d1
// group (and id), otherwise the d0 group.
inline GraphOfFiniteGroups reduce(const GraphOfFiniteGroups& x) {
  std::vector<GogVertex> verts = x.vertices();
  std::vector<GogEdge> edges = x.edges();
  for (;;) {
    std::size_t hit = edges.size();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (!e.is_loop() && (e.order == verts[e.d0].order || e.order == verts[e.d1].order)) {
        hit = i;
        break;
      }
    }
    if (hit == edges.size()) break;

    const GogEdge e = edges[hit];
    const std::size_t keep = e.order == verts[e.d0].order ? e.d1 : e.d0;
    const std::size_t drop = keep == e.d1 ? e.d0 : e.d1;
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(hit));
    auto renumber = [&](std::size_t v) {
      if (v == drop) v = keep;
      return v > drop ? v - 1 : v;
    };
    for (auto& f : edges) {
      f.d0 = renumber(f.d0);
      f.d1 = renumber(f.d1);
    }
    verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  return GraphOfFiniteGroups(std::move(verts), std::move(edges));
}

// Exactly one edge, and either a loop with G_e = G_v or a proper edge with
// index 2 on both sides.
inline bool is_dihedral_type(const GraphOfFiniteGroups& x) {
  if (x.edges().size() != 1) return false;
  const auto& e = x.edges().front();
  if (e.is_loop()) return e.order == x.vertex_order(e.d0);
  return x.vertex_order(e.d0) == 2 * e.order && x.vertex_order(e.d1) == 2 * e.order;
}

// chi(G) = sum_v 1/|G_v| - sum_e 1/|G_e|, loops counted once.
inline mpq_class euler_characteristic(const GraphOfFiniteGroups& x) {
  mpq_class chi = 0;
  for (const auto& v : x.vertices()) chi += mpq_class(1, static_cast<unsigned long>(v.order));
  for (const auto& e : x.edges()) chi -= mpq_class(1, static_cast<unsigned long>(e.order));
  chi.canonicalize();
  return chi;
}

inline std::int64_t lcm_vertex_orders(const GraphOfFiniteGroups& x) {
  mpz_class l = 1;
  for (const auto& v : x.vertices()) {
    mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(v.order));
  }
  if (!l.fits_slong_p()) throw PreconditionError("lcm of vertex orders overflows 64 bits");
  return l.get_si();
}

// Rank of a free open subgroup of index m: 1 - m * chi(G).
inline std::int64_t free_rank(const GraphOfFiniteGroups& x, std::int64_t m) {
  const std::int64_t l = lcm_vertex_orders(x);
  if (m < 1 || m % l != 0) {
    throw PreconditionError("index " + std::to_string(m) + " is not a positive multiple of the vertex-order lcm " +
                            std::to_string(l));
  }
  const mpq_class r = 1 - mpq_class(static_cast<long>(m)) * euler_characteristic(x);
  if (r.get_den() != 1) throw PreconditionError("non-integral free rank; inconsistent input");
  if (!r.get_num().fits_slong_p()) throw PreconditionError("free rank overflows 64 bits");
  return r.get_num().get_si();
}

struct EulerReport {
  mpq_class chi;
  std::int64_t lcm_orders = 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> ranks;  // (index m, rank F)
};

inline EulerReport euler_report(const GraphOfFiniteGroups& x, int multiples = 4) {
  EulerReport r{euler_characteristic(x), lcm_vertex_orders(x), {}};
  for (int t = 1; t <= multiples; ++t) {
    const std::int64_t m = r.lcm_orders * t;
    r.ranks.emplace_back(m, free_rank(x, m));
  }
  return r;
}

struct VertexIndexBound {
  std::string edge;
  std::string vertex;
  std::int64_t index = 0;  // [G_v : G_e]
  std::int64_t limit = 0;  // 3 rank + 2
  bool holds = false;
};

struct EdgeIndexBound {
  std::string edge;
  std::int64_t index = 0;  // [G : F G_e] = m / |G_e|
  std::int64_t limit = 0;  // 6 rank
  bool holds = false;
};

struct BoundsReport {
  std::int64_t index = 0;
  std::int64_t rank = 0;
  bool vertex_bound_checked = false;
  std::string vertex_bound_skip;
  std::vector<VertexIndexBound> vertex_bounds;
  bool edge_bound_checked = false;
  std::string edge_bound_skip;
  std::vector<EdgeIndexBound> edge_bounds;

  // A false entry on checked input contradicts the inequalities and is a defect.
  bool all_hold() const {
    for (const auto& b : vertex_bounds) {
      if (!b.holds) return false;
    }
    for (const auto& b : edge_bounds) {
      if (!b.holds) return false;
    }
    return true;
  }
};

// Evaluates [G_v : G_e] < 3 rank(F) + 2 for every edge and endpoint, and, off
// the dihedral case, [G : F G_e] < 6 rank(F) for every edge. Both need a
// reduced graph.
inline BoundsReport check_bounds(const GraphOfFiniteGroups& x, std::int64_t m) {
  BoundsReport r;
  r.index = m;
  r.rank = free_rank(x, m);
  const bool reduced = is_reduced(x);
  if (!reduced) {
    r.vertex_bound_skip = "graph of groups is not reduced";
    r.edge_bound_skip = "graph of groups is not reduced";
    return r;
  }
  r.vertex_bound_checked = true;
  for (const auto& e : x.edges()) {
    for (std::size_t v : {e.d0, e.d1}) {
      VertexIndexBound b{e.id, x.vertices()[v].id, x.vertex_order(v) / e.order, 3 * r.rank + 2, false};
      b.holds = b.index < b.limit;
      r.vertex_bounds.push_back(std::move(b));
      if (e.is_loop()) break;
    }
  }
  if (is_dihedral_type(x)) {
    r.edge_bound_skip = "dihedral type";
    return r;
  }
  r.edge_bound_checked = true;
  for (const auto& e : x.edges()) {
    EdgeIndexBound b{e.id, m / e.order, 6 * r.rank, false};
    b.holds = b.index < b.limit;
    r.edge_bounds.push_back(std::move(b));
  }
  return r;
}

}  // namespace raagfp
