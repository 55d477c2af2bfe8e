#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "raagfp/chain_complex.hpp"
#include "raagfp/flag_homology.hpp"
#include "raagfp/fpcheck.hpp"
#include "raagfp/gog.hpp"
#include "raagfp/json_io.hpp"
#include "raagfp/parallel.hpp"
#include "raagfp/random.hpp"
#include "raagfp/report.hpp"

// Randomized property harness behind `raagfp verify`.
namespace raagfp::verify {

struct Options {
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::size_t max_vertices = 7;
  unsigned jobs = 1;
};

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string witness;  // smallest failing instance
  bool passed() const { return failures == 0; }
};

struct Summary {
  std::vector<SuiteResult> suites;
  bool passed() const {
    for (const auto& s : suites) {
      if (!s.passed()) return false;
    }
    return true;
  }
};

// Describes the first degree where d o d != 0, if any.
inline std::optional<std::string> d_squared_witness(const ChainComplexFp& c) {
  if (auto n = c.first_nonzero_square()) {
    return "boundary(" + std::to_string(*n - 1) + ") * boundary(" + std::to_string(*n) + ") != 0 over F_" +
           std::to_string(c.prime());
  }
  return std::nullopt;
}

namespace detail {

struct TrialOutcome {
  bool ok = true;
  std::size_t size = 0;
  std::string description;
};

inline random::Rng trial_rng(std::uint64_t seed, std::uint64_t suite, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(suite), static_cast<std::uint32_t>(trial)};
  return random::Rng(seq);
}

inline std::string describe(const SimplicialGraph& g, const Character& chi) {
  return Json{{"graph", graph_to_json(g)}, {"character", character_to_json(chi, g)}}.dump();
}

struct Instance {
  SimplicialGraph g;
  Character chi;
};

inline Instance random_instance(random::Rng& rng, std::size_t max_vertices) {
  static constexpr std::uint32_t kPrimes[] = {2, 3, 5};
  const std::size_t n = random::uniform(rng, 1, max_vertices);
  const double density = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
  SimplicialGraph g = random::graph(rng, n, density);
  Character chi = random::binary_character(rng, n, kPrimes[random::uniform(rng, 0, 2)]);
  return {std::move(g), std::move(chi)};
}

template <typename Trial>
SuiteResult run_suite(const std::string& name, std::uint64_t suite_id, const Options& opt, Trial trial) {
  const auto outcomes = parallel_map<TrialOutcome>(opt.trials, opt.jobs, [&](std::size_t i) {
    random::Rng rng = trial_rng(opt.seed, suite_id, i);
    return trial(rng);
  });
  SuiteResult r{name, opt.trials, 0, {}};
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& o : outcomes) {
    if (o.ok) continue;
    ++r.failures;
    if (o.size < best) {
      best = o.size;
      r.witness = o.description;
    }
  }
  return r;
}

}  // namespace detail

inline SuiteResult route_agreement(const Options& opt) {
  return detail::run_suite("route_agreement", 1, opt, [&](random::Rng& rng) {
    auto [g, chi] = detail::random_instance(rng, opt.max_vertices);
    detail::TrialOutcome o{true, g.size(), {}};
    const bool fg = is_fg(g, chi);
    for (int n = 1; n <= static_cast<int>(g.size()); ++n) {
      const bool links = fp_via_links(g, chi, n).fp;
      const bool complex = fp_via_complex(g, chi, n).fp;
      if (links != complex || (n == 1 && complex != fg)) {
        o.ok = false;
        o.description = detail::describe(g, chi) + " disagrees at n=" + std::to_string(n);
        break;
      }
    }
    return o;
  });
}

inline SuiteResult decomposition(const Options& opt) {
  return detail::run_suite("decomposition", 2, opt, [&](random::Rng& rng) {
    auto [g, chi] = detail::random_instance(rng, opt.max_vertices);
    detail::TrialOutcome o{true, g.size(), {}};
    const DecompositionReport r = decomposition_check(g, chi);
    if (!r.pass) {
      o.ok = false;
      o.description = detail::describe(g, chi);
    }
    return o;
  });
}

inline SuiteResult d_squared(const Options& opt) {
  return detail::run_suite("d_squared_zero", 3, opt, [&](random::Rng& rng) {
    auto [g, chi] = detail::random_instance(rng, opt.max_vertices);
    detail::TrialOutcome o{true, g.size(), {}};
    auto w = d_squared_witness(build_complex_C(g, chi));
    if (!w) w = d_squared_witness(simplicial_chain_complex(flag_complex(g), chi.p, true));
    if (w) {
      o.ok = false;
      o.description = detail::describe(g, chi) + ": " + *w;
    }
    return o;
  });
}

// Replacing nonzero values by other nonzero integers (p-divisible ones
// included) or scaling by p^t changes nothing but the rescale bookkeeping.
inline SuiteResult zero_pattern_invariance(const Options& opt) {
  return detail::run_suite("zero_pattern_invariance", 4, opt, [&](random::Rng& rng) {
    auto [g, chi] = detail::random_instance(rng, opt.max_vertices);
    detail::TrialOutcome o{true, g.size(), {}};
    const int max_n = static_cast<int>(g.size());
    FpnReport base = analyze_character(g, chi, max_n);
    Character fresh = random::reseed_nonzero(rng, chi, 50);
    Character scaled = chi;
    for (auto& x : scaled.values) x *= static_cast<std::int64_t>(chi.p) * chi.p;
    for (const Character& other : {fresh, scaled}) {
      FpnReport r = analyze_character(g, other, max_n);
      r.rescale_exponent = base.rescale_exponent;
      if (!(r == base)) {
        o.ok = false;
        o.description = detail::describe(g, chi) + " vs " + character_to_json(other, g).dump();
        break;
      }
    }
    return o;
  });
}

inline SuiteResult gog_bounds(const Options& opt) {
  return detail::run_suite("gog_bounds", 5, opt, [&](random::Rng& rng) {
    const GraphOfFiniteGroups x = random::graph_of_groups(rng, std::min<std::size_t>(opt.max_vertices, 6));
    detail::TrialOutcome o{true, x.vertices().size(), {}};
    const GraphOfFiniteGroups r = reduce(x);
    std::string problem;
    if (euler_characteristic(r) != euler_characteristic(x)) problem = "reduction changed the Euler characteristic";
    const std::int64_t l = lcm_vertex_orders(r);
    for (std::int64_t t = 1; t <= 4 && problem.empty(); ++t) {
      try {
        const std::int64_t rank = free_rank(r, l * t);
        if (rank >= 2 && !is_dihedral_type(r) && !check_bounds(r, l * t).all_hold()) {
          problem = "bound violated at index " + std::to_string(l * t);
        }
      } catch (const PreconditionError& e) {
        problem = e.what();
      }
    }
    if (!problem.empty()) {
      o.ok = false;
      o.description = gog_to_json(x).dump() + ": " + problem;
    }
    return o;
  });
}

inline Summary run_all(const Options& opt) {
  Summary s;
  s.suites.push_back(route_agreement(opt));
  s.suites.push_back(decomposition(opt));
  s.suites.push_back(d_squared(opt));
  s.suites.push_back(zero_pattern_invariance(opt));
  s.suites.push_back(gog_bounds(opt));
  return s;
}

inline Json summary_to_json(const Summary& s, const Options& opt) {
  Json suites = Json::array();
  for (const auto& r : s.suites) {
    Json j{{"name", r.name}, {"instances", r.instances}, {"failures", r.failures}, {"passed", r.passed()}};
    if (!r.passed()) j["witness"] = r.witness;
    suites.push_back(std::move(j));
  }
  return Json{{"tool", "raagfp"},
              {"version", kToolVersion},
              {"command", "verify"},
              {"input", {{"seed", opt.seed}, {"trials", opt.trials}, {"max_vertices", opt.max_vertices}}},
              {"result", {{"suites", suites}, {"passed", s.passed()}}}};
}

}  // namespace raagfp::verify
