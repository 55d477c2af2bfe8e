// raagfp: finite generation and FP_n of coabelian kernels in pro-p RAAGs.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "raagfp/report.hpp"
#include "raagfp/verify.hpp"

namespace {

using namespace raagfp;

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void emit(const Json& report, const std::string& format) {
  if (format == "text") {
    std::cout << render_text(report);
  } else {
    std::cout << report.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finiteness properties of coabelian subgroups of pro-p right-angled Artin groups"};
  app.require_subcommand(1);

  std::string format = "json";
  unsigned jobs = default_jobs();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", jobs, "Worker threads (default: RAAGFP_JOBS or 1)")->check(CLI::PositiveNumber);

  std::string graph_file;
  std::string character_file;
  std::string matrix_file;
  std::string gog_file;
  std::optional<std::int64_t> p_override;
  int max_n = 0;

  auto* fg = app.add_subcommand("fg", "Decide finite generation of ker(chi)");
  fg->add_option("graph", graph_file, "Graph JSON")->required();
  fg->add_option("character", character_file, "Character JSON")->required();
  fg->add_option("--p", p_override, "Override the character's prime");

  auto* fpn = app.add_subcommand("fpn", "FP_n table of ker(chi) by links and by the complex C");
  fpn->add_option("graph", graph_file, "Graph JSON")->required();
  fpn->add_option("character", character_file, "Character JSON")->required();
  fpn->add_option("--p", p_override, "Override the character's prime");
  fpn->add_option("--max-n", max_n, "Highest degree n (default: clique number)");

  std::int64_t table_p = 2;
  std::size_t cap = kDefaultTableCap;
  auto* table = app.add_subcommand("table", "fg and max FP level for every support subset");
  table->add_option("graph", graph_file, "Graph JSON")->required();
  table->add_option("--p", table_p, "Prime");
  table->add_option("--cap", cap, "Largest vertex count accepted");

  auto* coab = app.add_subcommand("coabelian", "Analyse N = ker(G -> Z_p^k) given by an integer matrix");
  coab->add_option("graph", graph_file, "Graph JSON")->required();
  coab->add_option("matrix", matrix_file, "Matrix JSON")->required();
  coab->add_option("--p", p_override, "Override the matrix's prime");
  coab->add_option("--max-n", max_n, "Highest degree n (default: clique number)");

  verify::Options vopt;
  auto* ver = app.add_subcommand("verify", "Randomized cross-checks of all invariants");
  ver->add_option("--seed", vopt.seed, "RNG seed");
  ver->add_option("--trials", vopt.trials, "Instances per suite");
  ver->add_option("--max-vertices", vopt.max_vertices, "Largest random graph")->check(CLI::Range(1, 12));

  std::int64_t index = 0;
  auto* gog = app.add_subcommand("gog", "Euler characteristic and index bounds for a graph of finite groups");
  gog->add_option("gog", gog_file, "Graph-of-groups JSON")->required();
  gog->add_option("--index", index, "Index m of the free subgroup (default: lcm of vertex orders)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kSchemaError;
  }

  try {
    CommandResult result;
    if (*fg || *fpn) {
      const SimplicialGraph g = parse_graph(read_json_file(graph_file));
      Character chi = parse_character(read_json_file(character_file), g);
      if (p_override) chi.p = checked_prime(*p_override);
      result = *fg ? fg_command(g, chi) : fpn_command(g, chi, max_n);
    } else if (*table) {
      const SimplicialGraph g = parse_graph(read_json_file(graph_file));
      result = table_command(g, checked_prime(table_p), jobs, cap);
    } else if (*coab) {
      const SimplicialGraph g = parse_graph(read_json_file(graph_file));
      CoabelianSpec m = parse_matrix(read_json_file(matrix_file), g);
      if (p_override) m.p = checked_prime(*p_override);
      result = coabelian_command(g, m, max_n);
    } else if (*ver) {
      vopt.jobs = jobs;
      const verify::Summary s = verify::run_all(vopt);
      result = {verify::summary_to_json(s, vopt), s.passed() ? kVerdictTrue : kVerdictFalse};
    } else if (*gog) {
      result = gog_command(parse_gog(read_json_file(gog_file)), index);
    }
    emit(result.report, format);
    return result.exit_code;
  } catch (const InputError& e) {
    std::cerr << "raagfp: input error: " << e.what() << '\n';
    return kSchemaError;
  } catch (const NotEpimorphismError& e) {
    std::cerr << "raagfp: " << e.what() << '\n';
    return kNotApplicable;
  } catch (const FiniteQuotientError& e) {
    std::cerr << "raagfp: " << e.what() << '\n';
    return kNotApplicable;
  } catch (const PreconditionError& e) {
    std::cerr << "raagfp: " << e.what() << '\n';
    return kNotApplicable;
  }
}
