#include <gtest/gtest.h>

#include <set>

#include "raagfp/catalog.hpp"
#include "raagfp/coabelian.hpp"
#include "raagfp/random.hpp"

using namespace raagfp;

namespace {

CoabelianSpec mat(std::vector<std::vector<std::int64_t>> rows, std::uint32_t p = 2) { return {p, std::move(rows)}; }

CoabelianSpec identity(std::size_t n) {
  CoabelianSpec m{2, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0))};
  for (std::size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
  return m;
}

std::vector<VertexSet> zero_sets(const std::vector<ZeroPattern>& ps) {
  std::vector<VertexSet> out;
  for (const auto& z : ps) out.push_back(z.zero_set);
  return out;
}

// Zero set of lambda . M.
VertexSet zero_set_of(const CoabelianSpec& m, const std::vector<std::int64_t>& lambda) {
  VertexSet z;
  for (std::size_t v = 0; v < m.columns(); ++v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * m.rows[i][v];
    if (s == 0) z.insert(v);
  }
  return z;
}

}  // namespace

TEST(SpanClosure, Examples) {
  EXPECT_TRUE(span_closure(identity(2), VertexSet{}).empty());
  const auto line = mat({{1, 1}});
  EXPECT_TRUE(span_closure(line, VertexSet{}).empty());
  EXPECT_EQ(span_closure(line, VertexSet{0b01}), VertexSet{0b11});
  EXPECT_EQ(span_closure(mat({{1, 0, 2}, {3, 0, 1}}), VertexSet{}), VertexSet{0b010});
  EXPECT_THROW(span_closure(line, VertexSet{0b100}), InputError);
}

TEST(SpanClosure, ClosureAxioms) {
  random::Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = random::uniform(rng, 1, 7);
    const auto m = random::matrix(rng, random::uniform(rng, 1, 3), n, 2, 3);
    const VertexSet a = VertexSet{rng()} & VertexSet::first_n(n);
    const VertexSet b = a | (VertexSet{rng()} & VertexSet::first_n(n));
    const VertexSet ca = span_closure(m, a);
    EXPECT_TRUE(a.subset_of(ca));
    EXPECT_EQ(span_closure(m, ca), ca);
    EXPECT_TRUE(ca.subset_of(span_closure(m, b)));
  }
}

TEST(RationalRank, Examples) {
  EXPECT_EQ(rational_rank(identity(3)), 3U);
  EXPECT_EQ(rational_rank(mat({{1, 2}, {2, 4}})), 1U);
  EXPECT_EQ(rational_rank(mat({{0, 0}})), 0U);
  // Rank over Q, not F_p.
  EXPECT_EQ(rational_rank(mat({{1, 1}, {1, 3}})), 2U);
}

TEST(EnumeratePatterns, Examples) {
  const auto id2 = enumerate_patterns(identity(2));
  EXPECT_EQ(zero_sets(id2), (std::vector<VertexSet>{VertexSet{}, VertexSet{0b01}, VertexSet{0b10}}));
  EXPECT_EQ(zero_sets(enumerate_patterns(mat({{1, 1}}))), (std::vector<VertexSet>{VertexSet{}}));
  EXPECT_THROW(enumerate_patterns(mat({{0, 0, 0}})), FiniteQuotientError);
  for (const auto& z : id2) EXPECT_TRUE(verify_certificate(identity(2), z));
}

TEST(EnumeratePatterns, SingleRowGivesItsZeroSet) {
  random::Rng rng(103);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = random::uniform(rng, 1, 7);
    auto m = random::matrix(rng, 1, n, 3, 5);
    if (rational_rank(m) == 0) continue;
    const auto ps = enumerate_patterns(m);
    ASSERT_EQ(ps.size(), 1U);
    EXPECT_EQ(ps[0].zero_set, zero_set_of(m, {1}));
  }
}

TEST(EnumeratePatterns, CertificatesSound) {
  random::Rng rng(107);
  for (int t = 0; t < 100; ++t) {
    const auto m = random::matrix(rng, random::uniform(rng, 1, 3), random::uniform(rng, 1, 7), 3, 2);
    if (rational_rank(m) == 0) continue;
    for (const auto& z : enumerate_patterns(m)) {
      EXPECT_TRUE(verify_certificate(m, z));
      bool nonzero = false;
      for (const auto& x : z.certificate) nonzero = nonzero || x != 0;
      EXPECT_TRUE(nonzero);
    }
  }
}

// Every zero set hit by random integer lambda is enumerated, and every
// enumerated set is hit by its certificate.
TEST(EnumeratePatterns, CompleteAgainstRandomLambda) {
  random::Rng rng(109);
  for (int t = 0; t < 30; ++t) {
    const std::size_t k = random::uniform(rng, 1, 3);
    const std::size_t n = random::uniform(rng, 1, 7);
    auto m = random::matrix(rng, k, n, 2, 3);
    // Force some dependencies among columns.
    if (n >= 3 && t % 2 == 0) {
      for (std::size_t i = 0; i < k; ++i) m.rows[i][2] = m.rows[i][0] + m.rows[i][1];
    }
    if (rational_rank(m) == 0) continue;
    const auto ps = enumerate_patterns(m);
    const auto sets = zero_sets(ps);
    const std::set<std::uint64_t> known = [&] {
      std::set<std::uint64_t> s;
      for (VertexSet z : sets) s.insert(z.bits());
      return s;
    }();
    for (int s = 0; s < 10000; ++s) {
      std::vector<std::int64_t> lambda(k);
      bool nonzero = false;
      for (auto& x : lambda) {
        x = random::uniform_int(rng, -9, 9);
        nonzero = nonzero || x != 0;
      }
      if (!nonzero) continue;
      const VertexSet z = zero_set_of(m, lambda);
      if (z == VertexSet::first_n(n)) continue;  // lambda kills M: not a quotient
      EXPECT_TRUE(known.count(z.bits())) << "trial " << t;
    }
  }
}

TEST(FgCoabelian, Examples) {
  const auto free2 = fg_coabelian(catalog::edgeless(2), identity(2));
  EXPECT_FALSE(free2.fg);
  ASSERT_TRUE(free2.witness.has_value());
  EXPECT_TRUE(free2.witness->zero_set.empty());
  EXPECT_TRUE(fg_coabelian(catalog::complete(2), mat({{1, 1}})).fg);
  EXPECT_TRUE(fg_coabelian(catalog::complete(3), identity(3)).fg);
  EXPECT_THROW(fg_coabelian(catalog::complete(2), mat({{0, 0}})), FiniteQuotientError);
  EXPECT_THROW(fg_coabelian(catalog::complete(2), mat({{1, 0, 1}})), InputError);
}

TEST(FpnCoabelian, Examples) {
  EXPECT_FALSE(fpn_coabelian(catalog::edgeless(2), identity(2), 1).fp);
  const auto c4 = fpn_coabelian(catalog::cycle(4), mat({{1, 1, 1, 1}}), 2);
  EXPECT_FALSE(c4.fp);
  ASSERT_EQ(c4.per_pattern.size(), 1U);
  EXPECT_TRUE(c4.per_pattern[0].first.zero_set.empty());
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(fpn_coabelian(catalog::complete(3), identity(3), n).fp);
}

// k = 1 aggregation is the single-character analysis of that row.
TEST(FpnCoabelian, SingleRowMatchesCharacter) {
  random::Rng rng(113);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = random::uniform(rng, 1, 7);
    const auto g = random::graph(rng, n, 0.5);
    const auto m = random::matrix(rng, 1, n, 2, 3);
    if (rational_rank(m) == 0) continue;
    const Character chi{m.p, m.rows[0]};
    const int deg = static_cast<int>(std::max<std::size_t>(1, clique_number(g)));
    EXPECT_EQ(fg_coabelian(g, m).fg, is_fg(g, chi));
    const auto agg = fpn_coabelian(g, m, deg);
    FpnReport direct = analyze_character(g, chi, deg);
    FpnReport via = agg.per_pattern.at(0).second;
    via.rescale_exponent = direct.rescale_exponent;
    EXPECT_EQ(via, direct);
    EXPECT_EQ(agg.fp, direct.degrees.back().fp_complex);
  }
}

TEST(IsFull, Examples) {
  const auto k2 = is_full(catalog::complete(2), mat({{1, 1}}));
  EXPECT_FALSE(k2.full);
  ASSERT_EQ(k2.factors.size(), 2U);
  for (const auto& f : k2.factors) {
    EXPECT_TRUE(f.is_clique);
    EXPECT_EQ(f.restricted_rank, 1U);
    EXPECT_FALSE(f.meets_subgroup);
  }

  // P_3 = {v1,v3} * {v2}: the edgeless pair is non-abelian, and the column of
  // v2 is zero, so both factors meet N.
  const auto p3 = is_full(catalog::path(3), mat({{1, 0, 1}}));
  EXPECT_TRUE(p3.full);
  ASSERT_EQ(p3.factors.size(), 2U);
  EXPECT_FALSE(p3.factors[0].is_clique);
  EXPECT_TRUE(p3.factors[1].is_clique);
  EXPECT_EQ(p3.factors[1].restricted_rank, 0U);
  EXPECT_TRUE(p3.marker.empty());  // kernel not finitely generated

  const auto p4 = is_full(catalog::path(4), mat({{1, 0, 0, 1}}));
  EXPECT_TRUE(p4.full);
  ASSERT_EQ(p4.factors.size(), 1U);
  EXPECT_FALSE(p4.factors[0].is_clique);

  const auto k2b = is_full(catalog::complete(2), mat({{1, 0}}));
  EXPECT_FALSE(k2b.full);
  EXPECT_FALSE(k2b.factors[0].meets_subgroup);
  EXPECT_TRUE(k2b.factors[1].meets_subgroup);
}

TEST(IsFull, MarkerWhenFullAndFg) {
  const auto c4 = is_full(catalog::cycle(4), mat({{1, 1, 1, 1}}));
  EXPECT_TRUE(c4.full);
  EXPECT_EQ(c4.marker, kFiniteByAbelianMarker);
}
