#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "raagfp/coabelian.hpp"
#include "raagfp/error.hpp"
#include "raagfp/fpcheck.hpp"
#include "raagfp/gog.hpp"
#include "raagfp/graph.hpp"

namespace raagfp {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& doc, const char* key, const char* what) {
  if (!doc.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

inline std::int64_t as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + ": expected an integer");
  return j.get<std::int64_t>();
}

inline const std::string& as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + ": expected a string");
  return j.get_ref<const std::string&>();
}

inline std::size_t vertex_index(const SimplicialGraph& g, const std::string& name, const std::string& what) {
  auto idx = g.index_of(name);
  if (!idx) throw InputError(what + ": unknown vertex '" + name + "'");
  return *idx;
}

}  // namespace detail

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// {"vertices": [string...], "edges": [[string, string]...]}; array order of
// "vertices" is the vertex order.
inline SimplicialGraph parse_graph(const Json& doc) {
  const Json& vs = detail::field(doc, "vertices", "graph");
  const Json& es = detail::field(doc, "edges", "graph");
  if (!vs.is_array() || !es.is_array()) throw InputError("graph: 'vertices' and 'edges' must be arrays");
  std::vector<std::string> names;
  for (const auto& v : vs) names.push_back(detail::as_string(v, "graph vertex"));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) throw InputError("graph: each edge must be a pair of vertex ids");
    edges.emplace_back(detail::as_string(e[0], "graph edge"), detail::as_string(e[1], "graph edge"));
  }
  return SimplicialGraph::from_names(std::move(names), edges);
}

inline Json graph_to_json(const SimplicialGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return Json{{"vertices", g.names()}, {"edges", edges}};
}

// 64-bit FNV-1a of the compact graph JSON, as 16 hex digits.
inline std::string graph_hash(const SimplicialGraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : graph_to_json(g).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// {"p": int, "chi": {vertex: int, ...}}; every vertex must be assigned.
inline Character parse_character(const Json& doc, const SimplicialGraph& g) {
  Character chi;
  chi.p = checked_prime(detail::as_int(detail::field(doc, "p", "character"), "character p"));
  const Json& values = detail::field(doc, "chi", "character");
  if (!values.is_object()) throw InputError("character: 'chi' must be an object");
  chi.values.assign(g.size(), 0);
  std::vector<bool> assigned(g.size(), false);
  for (auto it = values.begin(); it != values.end(); ++it) {
    const std::size_t v = detail::vertex_index(g, it.key(), "character");
    chi.values[v] = detail::as_int(it.value(), "character value of '" + it.key() + "'");
    assigned[v] = true;
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!assigned[v]) throw InputError("character: no value for vertex '" + g.name(v) + "'");
  }
  return chi;
}

inline Json character_to_json(const Character& chi, const SimplicialGraph& g) {
  Json values = Json::object();
  for (std::size_t v = 0; v < g.size(); ++v) values[g.name(v)] = chi.values[v];
  return Json{{"p", chi.p}, {"chi", values}};
}

// {"p": int, "rows": [[int...]...]}, columns in vertex order.
inline CoabelianSpec parse_matrix(const Json& doc, const SimplicialGraph& g) {
  CoabelianSpec m;
  m.p = checked_prime(detail::as_int(detail::field(doc, "p", "matrix"), "matrix p"));
  const Json& rows = detail::field(doc, "rows", "matrix");
  if (!rows.is_array()) throw InputError("matrix: 'rows' must be an array");
  for (const auto& r : rows) {
    if (!r.is_array()) throw InputError("matrix: each row must be an array");
    std::vector<std::int64_t> row;
    for (const auto& x : r) row.push_back(detail::as_int(x, "matrix entry"));
    m.rows.push_back(std::move(row));
  }
  require_matches(g, m);
  return m;
}

inline Json matrix_to_json(const CoabelianSpec& m) { return Json{{"p", m.p}, {"rows", m.rows}}; }

// {"vertices": [{"id": s, "order": int}], "edges": [{"id": s, "d0": s, "d1": s, "order": int}]}
inline GraphOfFiniteGroups parse_gog(const Json& doc) {
  const Json& vs = detail::field(doc, "vertices", "graph of groups");
  const Json& es = detail::field(doc, "edges", "graph of groups");
  if (!vs.is_array() || !es.is_array()) throw InputError("graph of groups: 'vertices' and 'edges' must be arrays");
  std::vector<GogVertex> verts;
  std::unordered_map<std::string, std::size_t> index;
  for (const auto& v : vs) {
    GogVertex gv{detail::as_string(detail::field(v, "id", "gog vertex"), "gog vertex id"),
                 detail::as_int(detail::field(v, "order", "gog vertex"), "gog vertex order")};
    index.emplace(gv.id, verts.size());
    verts.push_back(std::move(gv));
  }
  auto endpoint = [&](const Json& e, const char* key) {
    const std::string& id = detail::as_string(detail::field(e, key, "gog edge"), "gog edge endpoint");
    auto it = index.find(id);
    if (it == index.end()) throw InputError("gog edge references unknown vertex '" + id + "'");
    return it->second;
  };
  std::vector<GogEdge> edges;
  for (const auto& e : es) {
    edges.push_back({detail::as_string(detail::field(e, "id", "gog edge"), "gog edge id"), endpoint(e, "d0"),
                     endpoint(e, "d1"), detail::as_int(detail::field(e, "order", "gog edge"), "gog edge order")});
  }
  return GraphOfFiniteGroups(std::move(verts), std::move(edges));
}

inline Json gog_to_json(const GraphOfFiniteGroups& x) {
  Json vs = Json::array();
  for (const auto& v : x.vertices()) vs.push_back({{"id", v.id}, {"order", v.order}});
  Json es = Json::array();
  for (const auto& e : x.edges()) {
    es.push_back({{"id", e.id}, {"d0", x.vertices()[e.d0].id}, {"d1", x.vertices()[e.d1].id}, {"order", e.order}});
  }
  return Json{{"vertices", vs}, {"edges", es}};
}

// ---- report pieces -------------------------------------------------------

inline Json vertex_set_to_json(const SimplicialGraph& g, VertexSet s) {
  Json out = Json::array();
  for (std::size_t v : s.members()) out.push_back(g.name(v));
  return out;
}

inline VertexSet vertex_set_from_json(const Json& j, const SimplicialGraph& g) {
  if (!j.is_array()) throw InputError("vertex set: expected an array");
  VertexSet s;
  for (const auto& v : j) s.insert(detail::vertex_index(g, detail::as_string(v, "vertex set"), "vertex set"));
  return s;
}

inline Json fp_level_to_json(const FpLevel& f) {
  return f.infinite ? Json("inf") : Json(f.value);
}

inline FpLevel fp_level_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return FpLevel::inf();
  return FpLevel::finite(static_cast<std::size_t>(detail::as_int(j, "max_fp")));
}

inline Json homology_to_json(const HomologyDims& h) {
  Json out = Json::object();
  for (int d = h.lo; d <= h.hi(); ++d) out[std::to_string(d)] = h.at(d);
  return out;
}

inline Json fpn_report_to_json(const FpnReport& r, const SimplicialGraph& g) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees) {
    Json per = Json::array();
    for (const auto& [s, dim] : d.per_clique) {
      per.push_back({{"clique", vertex_set_to_json(g, s.members)},
                     {"link_degree", d.n - 1 - static_cast<int>(s.size())},
                     {"dim", dim}});
    }
    degrees.push_back({{"n", d.n},
                       {"fp_links", d.fp_links},
                       {"fp_complex", d.fp_complex},
                       {"dim_H_n_C", d.dim_hn_c},
                       {"per_clique", per}});
  }
  Json decomposition = Json::array();
  for (const auto& row : r.decomposition.rows) {
    decomposition.push_back({{"n", row.degree}, {"dim_H_n_C", row.complex_dim}, {"link_sum", row.link_sum}});
  }
  return Json{{"support", vertex_set_to_json(g, r.support)},
              {"connected", r.connected},
              {"dominant", r.dominant},
              {"fg", r.fg},
              {"degrees", degrees},
              {"max_fp", fp_level_to_json(r.max_fp)},
              {"rescale_exponent", r.rescale_exponent},
              {"normalized", r.rescale_exponent > 0},
              {"decomposition", {{"rows", decomposition}, {"pass", r.decomposition.pass}}},
              {"routes_agree", r.routes_agree}};
}

inline FpnReport fpn_report_from_json(const Json& j, const SimplicialGraph& g) {
  FpnReport r;
  r.support = vertex_set_from_json(detail::field(j, "support", "report"), g);
  r.connected = detail::field(j, "connected", "report").get<bool>();
  r.dominant = detail::field(j, "dominant", "report").get<bool>();
  r.fg = detail::field(j, "fg", "report").get<bool>();
  for (const auto& d : detail::field(j, "degrees", "report")) {
    DegreeReport dr;
    dr.n = d.at("n").get<int>();
    dr.fp_links = d.at("fp_links").get<bool>();
    dr.fp_complex = d.at("fp_complex").get<bool>();
    dr.dim_hn_c = d.at("dim_H_n_C").get<std::size_t>();
    for (const auto& pc : d.at("per_clique")) {
      dr.per_clique.emplace_back(Clique{vertex_set_from_json(pc.at("clique"), g)}, pc.at("dim").get<std::size_t>());
    }
    r.degrees.push_back(std::move(dr));
  }
  r.max_fp = fp_level_from_json(detail::field(j, "max_fp", "report"));
  r.rescale_exponent = detail::field(j, "rescale_exponent", "report").get<unsigned>();
  const Json& dec = detail::field(j, "decomposition", "report");
  for (const auto& row : dec.at("rows")) {
    r.decomposition.rows.push_back(
        {row.at("n").get<int>(), row.at("dim_H_n_C").get<std::size_t>(), row.at("link_sum").get<std::size_t>()});
  }
  r.decomposition.pass = dec.at("pass").get<bool>();
  r.routes_agree = detail::field(j, "routes_agree", "report").get<bool>();
  return r;
}

inline Json pattern_to_json(const ZeroPattern& z, const SimplicialGraph& g) {
  Json cert = Json::array();
  for (const auto& x : z.certificate) cert.push_back(x.get_str());
  return Json{{"zero_set", vertex_set_to_json(g, z.zero_set)}, {"certificate", cert}};
}

inline std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace raagfp
