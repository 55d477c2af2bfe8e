#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "raagfp/error.hpp"
#include "raagfp/vertex_set.hpp"

namespace raagfp {

// Finite simplicial graph on vertices 0..n-1. The index order is the fixed
// linear order on the vertices; clique signs and boundary matrices depend on
// it, so nothing here ever reorders vertices.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  // Throws InputError on duplicate names, self-loops, out-of-range endpoints
  // or more than kMaxVertices vertices. Duplicate edges are merged.
  SimplicialGraph(std::vector<std::string> names,
                  const std::vector<std::pair<std::size_t, std::size_t>>& edges)
      : names_(std::move(names)), adj_(names_.size(), 0) {
    if (names_.size() > kMaxVertices) {
      throw InputError("graph has " + std::to_string(names_.size()) + " vertices; at most " +
                       std::to_string(kMaxVertices) + " supported");
    }
    std::unordered_map<std::string_view, std::size_t> seen;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!seen.emplace(names_[i], i).second) {
        throw InputError("duplicate vertex id '" + names_[i] + "'");
      }
    }
    for (const auto& [u, v] : edges) {
      if (u >= names_.size() || v >= names_.size()) {
        throw InputError("edge endpoint index out of range");
      }
      if (u == v) throw InputError("self-loop at vertex '" + names_[u] + "'");
      adj_[u] |= std::uint64_t{1} << v;
      adj_[v] |= std::uint64_t{1} << u;
    }
  }

  // Vertices named by position; edges given by names.
  static SimplicialGraph from_names(std::vector<std::string> names,
                                    const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], i);
    std::vector<std::pair<std::size_t, std::size_t>> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      auto ia = index.find(a);
      if (ia == index.end()) throw InputError("edge references unknown vertex '" + a + "'");
      auto ib = index.find(b);
      if (ib == index.end()) throw InputError("edge references unknown vertex '" + b + "'");
      idx_edges.emplace_back(ia->second, ib->second);
    }
    return SimplicialGraph(std::move(names), idx_edges);
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  VertexSet all() const { return VertexSet::first_n(size()); }
  VertexSet neighbors(std::size_t v) const { return VertexSet{adj_.at(v)}; }
  bool adjacent(std::size_t u, std::size_t v) const { return neighbors(u).contains(v); }

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v : (neighbors(u) - VertexSet::first_n(u + 1)).members()) out.emplace_back(u, v);
    }
    return out;
  }
  std::size_t edge_count() const { return edges().size(); }

  friend bool operator==(const SimplicialGraph&, const SimplicialGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> adj_;
};

// A clique of some ambient graph; members iterate in vertex order.
struct Clique {
  VertexSet members;

  std::size_t size() const { return members.size(); }
  friend bool operator==(const Clique&, const Clique&) = default;
};

// cliques[k] holds the size-k cliques in lexicographic order.
using CliquesBySize = std::vector<std::vector<Clique>>;

inline void require_subset(const SimplicialGraph& g, VertexSet s) {
  if (!s.subset_of(g.all())) throw InputError("vertex set references unknown vertex");
}

inline SimplicialGraph induced_subgraph(const SimplicialGraph& g, VertexSet keep) {
  require_subset(g, keep);
  const auto kept = keep.members();
  std::vector<std::string> names;
  std::vector<std::size_t> new_index(g.size(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    names.push_back(g.name(kept[i]));
    new_index[kept[i]] = i;
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (keep.contains(u) && keep.contains(v)) edges.emplace_back(new_index[u], new_index[v]);
  }
  return SimplicialGraph(std::move(names), edges);
}

inline VertexSet vertex_link(const SimplicialGraph& g, std::size_t v) {
  if (v >= g.size()) throw InputError("unknown vertex index " + std::to_string(v));
  return g.neighbors(v);
}

// Connectivity of the subgraph induced on `within`. The empty vertex set is
// not connected.
inline bool is_connected(const SimplicialGraph& g, VertexSet within) {
  require_subset(g, within);
  if (within.empty()) return false;
  VertexSet reached = VertexSet::single(within.front());
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (std::size_t v : frontier.members()) next = next | (g.neighbors(v) & within);
    frontier = next - reached;
    reached = reached | frontier;
  }
  return reached == within;
}

inline bool is_connected(const SimplicialGraph& g) { return is_connected(g, g.all()); }

// Every vertex outside `sub` has a neighbour inside `sub`.
inline bool is_dominant(const SimplicialGraph& g, VertexSet sub) {
  require_subset(g, sub);
  for (std::size_t v : (g.all() - sub).members()) {
    if (!g.neighbors(v).intersects(sub)) return false;
  }
  return true;
}

inline SimplicialGraph complement(const SimplicialGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return SimplicialGraph(g.names(), edges);
}

// Indecomposable join factors: the connected components of the complement,
// ordered by smallest member.
inline std::vector<VertexSet> join_factors(const SimplicialGraph& g) {
  if (g.empty()) throw InputError("join decomposition of the empty graph");
  const VertexSet all = g.all();
  std::vector<VertexSet> factors;
  VertexSet unassigned = all;
  while (!unassigned.empty()) {
    VertexSet comp = VertexSet::single(unassigned.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (std::size_t v : frontier.members()) {
        next = next | (all - g.neighbors(v) - VertexSet::single(v));
      }
      frontier = next - comp;
      comp = comp | frontier;
    }
    factors.push_back(comp);
    unassigned = unassigned - comp;
  }
  return factors;
}

// Vertices adjacent to every other vertex.
inline VertexSet central_vertices(const SimplicialGraph& g) {
  VertexSet out;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.neighbors(v) == g.all() - VertexSet::single(v)) out.insert(v);
  }
  return out;
}

// Union of the join factors of g lying entirely inside `sub`: the largest
// Delta inside sub with g = Delta * Delta'.
inline VertexSet core_subgraph(const SimplicialGraph& g, VertexSet sub) {
  require_subset(g, sub);
  if (g.empty()) return {};
  VertexSet core;
  for (VertexSet f : join_factors(g)) {
    if (f.subset_of(sub)) core = core | f;
  }
  return core;
}

inline bool is_clique(const SimplicialGraph& g, VertexSet s) {
  for (std::size_t v : s.members()) {
    if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
  }
  return true;
}

namespace detail {

inline void extend_cliques(const SimplicialGraph& g, VertexSet current, VertexSet candidates,
                           std::size_t max_size, CliquesBySize& out) {
  out[current.size()].push_back(Clique{current});
  if (current.size() == max_size) return;
  for (std::size_t v : candidates.members()) {
    // Only extend by vertices after v so each clique is produced once, in
    // lexicographic order.
    VertexSet later = (candidates & g.neighbors(v)) - VertexSet::first_n(v + 1);
    extend_cliques(g, current | VertexSet::single(v), later, max_size, out);
  }
}

}  // namespace detail

// All cliques of size <= max_size inside `within`, including the empty one.
inline CliquesBySize enumerate_cliques(const SimplicialGraph& g, std::size_t max_size, VertexSet within) {
  require_subset(g, within);
  CliquesBySize out(std::min(max_size, within.size()) + 1);
  detail::extend_cliques(g, VertexSet{}, within, max_size, out);
  while (out.size() > 1 && out.back().empty()) out.pop_back();
  return out;
}

inline CliquesBySize enumerate_cliques(const SimplicialGraph& g, std::size_t max_size) {
  return enumerate_cliques(g, max_size, g.all());
}

// Largest clique size in the subgraph induced on `within`.
inline std::size_t clique_number(const SimplicialGraph& g, VertexSet within) {
  return enumerate_cliques(g, within.size(), within).size() - 1;
}

inline std::size_t clique_number(const SimplicialGraph& g) { return clique_number(g, g.all()); }

}  // namespace raagfp
