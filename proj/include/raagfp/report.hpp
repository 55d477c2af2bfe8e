#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "raagfp/coabelian.hpp"
#include "raagfp/error.hpp"
#include "raagfp/fpcheck.hpp"
#include "raagfp/gog.hpp"
#include "raagfp/graph.hpp"
#include "raagfp/json_io.hpp"
#include "raagfp/parallel.hpp"

namespace raagfp {

inline constexpr const char* kToolVersion = "1.0.0";

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kVerdictTrue = 0,
  kVerdictFalse = 1,
  kSchemaError = 2,
  kNotApplicable = 3,  // chi = 0, rank-0 matrix, bad index
  kDefect = 4,         // internal cross-check failed
};

struct CommandResult {
  Json report;
  int exit_code = kVerdictTrue;
};

inline Json envelope(const std::string& command, Json input, Json result) {
  return Json{{"tool", "raagfp"},
              {"version", kToolVersion},
              {"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)}};
}

inline Json graph_input(const SimplicialGraph& g) {
  return Json{{"graph_hash", graph_hash(g)}, {"vertices", g.size()}, {"edges", g.edge_count()}};
}

inline CommandResult fg_command(const SimplicialGraph& g, const Character& chi) {
  const SurjectivityCheck sc = check_surjective(g, chi);
  const FgVerdict v = fg_verdict(g, chi);
  Json warnings = Json::array();
  if (sc.rescale_exponent > 0) {
    warnings.push_back("character divided by p^" + std::to_string(sc.rescale_exponent) + " to make it surjective");
  }
  Json input = graph_input(g);
  input["character"] = character_to_json(chi, g);
  Json result{{"fg", v.fg},
              {"support", vertex_set_to_json(g, support_of(chi))},
              {"connected", v.connected},
              {"dominant", v.dominant},
              {"warnings", warnings}};
  return {envelope("fg", std::move(input), std::move(result)), v.fg ? kVerdictTrue : kVerdictFalse};
}

// Exit code: 4 on route or decomposition mismatch, else 0 iff FP_{max_n}.
inline CommandResult fpn_command(const SimplicialGraph& g, const Character& chi, int max_n) {
  const FpnReport r = analyze_character(g, chi, max_n);
  Json input = graph_input(g);
  input["character"] = character_to_json(chi, g);
  input["max_n"] = r.degrees.size();
  Json result = fpn_report_to_json(r, g);
  Json warnings = Json::array();
  if (r.rescale_exponent > 0) {
    warnings.push_back("character divided by p^" + std::to_string(r.rescale_exponent) + " to make it surjective");
  }
  result["warnings"] = warnings;
  int code = r.degrees.back().fp_complex ? kVerdictTrue : kVerdictFalse;
  if (!r.routes_agree || !r.decomposition.pass) code = kDefect;
  return {envelope("fpn", std::move(input), std::move(result)), code};
}

struct TableRow {
  VertexSet support;
  bool fg = false;
  FpLevel max_fp;
};

inline constexpr std::size_t kDefaultTableCap = 16;

// fg and max FP level for every nonempty support, ordered by size then
// lexicographically. Any character with a given support gives the same row.
inline std::vector<TableRow> character_table(const SimplicialGraph& g, std::uint32_t p, unsigned jobs,
                                             std::size_t cap = kDefaultTableCap) {
  checked_prime(p);
  if (g.size() > cap) {
    throw InputError("table: " + std::to_string(g.size()) + " vertices exceeds the cap of " + std::to_string(cap));
  }
  if (g.empty()) throw InputError("table: graph has no vertices");
  std::vector<VertexSet> supports;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.size()); ++bits) supports.emplace_back(bits);
  std::sort(supports.begin(), supports.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
  });
  return parallel_map<TableRow>(supports.size(), jobs, [&](std::size_t i) {
    Character chi{p, std::vector<std::int64_t>(g.size(), 0)};
    for (std::size_t v : supports[i].members()) chi.values[v] = 1;
    return TableRow{supports[i], is_fg(g, chi), max_fp(g, chi)};
  });
}

inline CommandResult table_command(const SimplicialGraph& g, std::uint32_t p, unsigned jobs,
                                   std::size_t cap = kDefaultTableCap) {
  Json rows = Json::array();
  for (const auto& row : character_table(g, p, jobs, cap)) {
    rows.push_back({{"support", vertex_set_to_json(g, row.support)},
                    {"fg", row.fg},
                    {"max_fp", fp_level_to_json(row.max_fp)}});
  }
  Json input = graph_input(g);
  input["p"] = p;
  Json result{{"rows", rows}, {"row_count", rows.size()}};
  return {envelope("table", std::move(input), std::move(result)), kVerdictTrue};
}

// Exit code: 4 on an internal mismatch in any pattern, else 0 iff FP_{max_n}.
inline CommandResult coabelian_command(const SimplicialGraph& g, const CoabelianSpec& m, int max_n) {
  if (max_n <= 0) max_n = static_cast<int>(std::max<std::size_t>(1, clique_number(g)));
  const CoabelianFg fg = fg_coabelian(g, m);
  const CoabelianFpn fpn = fpn_coabelian(g, m, max_n);
  const FullnessReport full = is_full(g, m);

  bool defect = false;
  Json patterns = Json::array();
  for (const auto& [z, rep] : fpn.per_pattern) {
    Json pj = pattern_to_json(z, g);
    pj["certificate_verified"] = verify_certificate(m, z);
    pj["report"] = fpn_report_to_json(rep, g);
    defect = defect || !rep.routes_agree || !rep.decomposition.pass || !verify_certificate(m, z);
    patterns.push_back(std::move(pj));
  }
  Json factors = Json::array();
  for (const auto& f : full.factors) {
    factors.push_back({{"factor", vertex_set_to_json(g, f.factor)},
                       {"clique", f.is_clique},
                       {"meets_N", f.meets_subgroup},
                       {"reason", f.reason}});
  }
  Json fullness{{"full", full.full}, {"factors", factors}};
  if (!full.marker.empty()) fullness["marker"] = full.marker;

  Json result{{"rank", rational_rank(m)},
              {"pattern_count", patterns.size()},
              {"patterns", patterns},
              {"fg", fg.fg},
              {"fg_witness", fg.witness ? pattern_to_json(*fg.witness, g) : Json(nullptr)},
              {"fp", fpn.fp},
              {"fp_witness", fpn.witness ? pattern_to_json(*fpn.witness, g) : Json(nullptr)},
              {"fullness", fullness}};
  Json input = graph_input(g);
  input["matrix"] = matrix_to_json(m);
  input["max_n"] = max_n;
  int code = fpn.fp ? kVerdictTrue : kVerdictFalse;
  if (defect) code = kDefect;
  return {envelope("coabelian", std::move(input), std::move(result)), code};
}

inline Json bounds_to_json(const BoundsReport& b) {
  Json vb = Json::array();
  for (const auto& x : b.vertex_bounds) {
    vb.push_back({{"edge", x.edge}, {"vertex", x.vertex}, {"index", x.index}, {"limit", x.limit}, {"holds", x.holds}});
  }
  Json eb = Json::array();
  for (const auto& x : b.edge_bounds) {
    eb.push_back({{"edge", x.edge}, {"index", x.index}, {"limit", x.limit}, {"holds", x.holds}});
  }
  Json out{{"index", b.index},
           {"rank", b.rank},
           {"vertex_bound", {{"checked", b.vertex_bound_checked}, {"entries", vb}}},
           {"edge_bound", {{"checked", b.edge_bound_checked}, {"entries", eb}}},
           {"all_hold", b.all_hold()}};
  if (!b.vertex_bound_skip.empty()) out["vertex_bound"]["skipped"] = b.vertex_bound_skip;
  if (!b.edge_bound_skip.empty()) out["edge_bound"]["skipped"] = b.edge_bound_skip;
  return out;
}

// index <= 0 selects the lcm of the vertex orders. Bounds are evaluated on
// both the input and its reduced form. Exit code 4 if a checked bound fails.
inline CommandResult gog_command(const GraphOfFiniteGroups& x, std::int64_t index) {
  if (index <= 0) index = lcm_vertex_orders(x);
  const EulerReport er = euler_report(x);
  const GraphOfFiniteGroups reduced = reduce(x);
  const BoundsReport input_bounds = check_bounds(x, index);
  const BoundsReport reduced_bounds = check_bounds(reduced, index);
  Json ranks = Json::array();
  for (const auto& [m, r] : er.ranks) ranks.push_back({{"index", m}, {"rank", r}});
  Json result{{"euler_characteristic", rational_to_string(er.chi)},
              {"lcm_orders", er.lcm_orders},
              {"free_ranks", ranks},
              {"reduced", is_reduced(x)},
              {"dihedral_type", is_dihedral_type(x)},
              {"reduced_form", gog_to_json(reduced)},
              {"reduced_form_dihedral_type", is_dihedral_type(reduced)},
              {"bounds", bounds_to_json(input_bounds)},
              {"reduced_bounds", bounds_to_json(reduced_bounds)}};
  Json input{{"gog", gog_to_json(x)}, {"index", index}};
  const int code = input_bounds.all_hold() && reduced_bounds.all_hold() ? kVerdictTrue : kDefect;
  return {envelope("gog", std::move(input), std::move(result)), code};
}

namespace detail {

inline void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

}  // namespace detail

// One "path  value" line per leaf, values aligned in a column.
inline std::string render_text(const Json& report) {
  std::vector<std::pair<std::string, std::string>> lines;
  detail::flatten(report, "", lines);
  std::size_t width = 0;
  for (const auto& [k, v] : lines) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : lines) {
    out += k;
    out.append(width - k.size() + 2, ' ');
    out += v;
    out += '\n';
  }
  return out;
}

}  // namespace raagfp
