#include <gtest/gtest.h>

#include "raagfp/gog.hpp"
#include "raagfp/random.hpp"

using namespace raagfp;

namespace {

// One non-loop edge with orders (o_d0, o_e, o_d1).
GraphOfFiniteGroups segment(std::int64_t a, std::int64_t e, std::int64_t b) {
  return GraphOfFiniteGroups({{"u", a}, {"w", b}}, {{"e", 0, 1, e}});
}

GraphOfFiniteGroups bouquet(std::int64_t vertex, std::vector<std::int64_t> loops) {
  std::vector<GogEdge> edges;
  for (std::size_t i = 0; i < loops.size(); ++i) edges.push_back({"l" + std::to_string(i + 1), 0, 0, loops[i]});
  return GraphOfFiniteGroups({{"v", vertex}}, std::move(edges));
}

}  // namespace

TEST(GraphOfGroups, Validation) {
  EXPECT_THROW(GraphOfFiniteGroups({}, {}), InputError);
  EXPECT_THROW(segment(4, 3, 6), InputError);
  EXPECT_THROW(GraphOfFiniteGroups({{"u", 2}, {"w", 2}}, {}), InputError);
  EXPECT_THROW(GraphOfFiniteGroups({{"u", 0}}, {}), InputError);
  EXPECT_THROW(GraphOfFiniteGroups({{"u", 2}, {"u", 2}}, {{"e", 0, 1, 1}}), InputError);
  EXPECT_THROW(GraphOfFiniteGroups({{"u", 2}}, {{"e", 0, 3, 1}}), InputError);
}

TEST(IsReduced, Examples) {
  EXPECT_FALSE(is_reduced(segment(2, 2, 4)));
  EXPECT_FALSE(is_reduced(segment(6, 3, 3)));
  EXPECT_TRUE(is_reduced(segment(2, 1, 2)));
  EXPECT_TRUE(is_reduced(segment(4, 2, 6)));
  EXPECT_TRUE(is_reduced(bouquet(3, {3})));
}

TEST(Reduce, PathCollapsesFirstEdge) {
  const GraphOfFiniteGroups x({{"a", 2}, {"b", 2}, {"c", 3}}, {{"e1", 0, 1, 2}, {"e2", 1, 2, 1}});
  const GraphOfFiniteGroups r = reduce(x);
  ASSERT_EQ(r.vertices().size(), 2U);
  ASSERT_EQ(r.edges().size(), 1U);
  EXPECT_EQ(r.vertex_order(r.edges()[0].d0), 2);
  EXPECT_EQ(r.edges()[0].order, 1);
  EXPECT_EQ(r.vertex_order(r.edges()[0].d1), 3);
  EXPECT_TRUE(is_reduced(r));
}

TEST(Reduce, ReducedInputUnchanged) {
  const auto x = segment(4, 2, 6);
  EXPECT_EQ(reduce(x), x);
  const auto b = bouquet(2, {2, 1});
  EXPECT_EQ(reduce(b), b);
}

TEST(Reduce, TriangleEndsAsSingleLoop) {
  const GraphOfFiniteGroups x({{"a", 2}, {"b", 2}, {"c", 2}}, {{"ab", 0, 1, 2}, {"bc", 1, 2, 2}, {"ca", 2, 0, 2}});
  const GraphOfFiniteGroups r = reduce(x);
  ASSERT_EQ(r.vertices().size(), 1U);
  ASSERT_EQ(r.edges().size(), 1U);
  EXPECT_TRUE(r.edges()[0].is_loop());
  EXPECT_EQ(r.edges()[0].order, 2);
  EXPECT_EQ(euler_characteristic(r), euler_characteristic(x));
}

TEST(Dihedral, Examples) {
  EXPECT_TRUE(is_dihedral_type(segment(2, 1, 2)));
  EXPECT_TRUE(is_dihedral_type(bouquet(5, {5})));
  EXPECT_FALSE(is_dihedral_type(segment(6, 2, 4)));
  EXPECT_FALSE(is_dihedral_type(bouquet(1, {1, 1})));
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic(segment(2, 1, 2)), 0);
  EXPECT_EQ(euler_characteristic(bouquet(1, {1})), 0);
  EXPECT_EQ(euler_characteristic(bouquet(1, {1, 1})), -1);
  EXPECT_EQ(euler_characteristic(segment(4, 2, 6)), mpq_class(-1, 12));
}

TEST(FreeRank, Examples) {
  EXPECT_EQ(free_rank(bouquet(1, {1, 1}), 1), 2);
  EXPECT_EQ(free_rank(segment(2, 1, 2), 2), 1);
  EXPECT_EQ(free_rank(segment(4, 2, 4), 4), 1);
  EXPECT_THROW(free_rank(segment(4, 2, 6), 6), PreconditionError);
  EXPECT_THROW(free_rank(segment(4, 2, 6), 0), PreconditionError);
}

TEST(FreeRank, AffineInIndex) {
  random::Rng rng(201);
  for (int t = 0; t < 200; ++t) {
    const auto x = random::graph_of_groups(rng, 6);
    const std::int64_t l = lcm_vertex_orders(x);
    const std::int64_t r1 = free_rank(x, l);
    for (std::int64_t k = 2; k <= 4; ++k) {
      // rank(F_m) - 1 = (m / l) * (rank(F_l) - 1)
      EXPECT_EQ(free_rank(x, k * l) - 1, k * (r1 - 1));
    }
  }
}

TEST(CheckBounds, Examples) {
  const auto b = check_bounds(segment(4, 2, 6), 12);
  EXPECT_EQ(b.rank, 2);
  ASSERT_TRUE(b.vertex_bound_checked);
  ASSERT_EQ(b.vertex_bounds.size(), 2U);
  EXPECT_EQ(b.vertex_bounds[0].index, 2);
  EXPECT_EQ(b.vertex_bounds[1].index, 3);
  EXPECT_EQ(b.vertex_bounds[0].limit, 8);
  ASSERT_TRUE(b.edge_bound_checked);
  EXPECT_EQ(b.edge_bounds[0].index, 6);
  EXPECT_EQ(b.edge_bounds[0].limit, 12);
  EXPECT_TRUE(b.all_hold());

  const auto bq = check_bounds(bouquet(2, {2, 2}), 2);
  EXPECT_EQ(bq.rank, 2);
  ASSERT_EQ(bq.edge_bounds.size(), 2U);
  EXPECT_EQ(bq.edge_bounds[0].index, 1);
  EXPECT_EQ(bq.edge_bounds[0].limit, 12);
  EXPECT_TRUE(bq.all_hold());

  const auto d = check_bounds(segment(2, 1, 2), 2);
  EXPECT_FALSE(d.edge_bound_checked);
  EXPECT_EQ(d.edge_bound_skip, "dihedral type");
  EXPECT_TRUE(d.vertex_bound_checked);
}

TEST(CheckBounds, SkippedWhenNotReduced) {
  const auto b = check_bounds(segment(8, 1, 1), 8);
  EXPECT_FALSE(b.vertex_bound_checked);
  EXPECT_FALSE(b.edge_bound_checked);
  EXPECT_TRUE(b.all_hold());
}

TEST(RandomGog, ReductionAndBounds) {
  random::Rng rng(203);
  std::size_t checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto x = random::graph_of_groups(rng, 6);
    const auto r = reduce(x);
    ASSERT_TRUE(is_reduced(r));
    ASSERT_EQ(euler_characteristic(r), euler_characteristic(x));
    const std::int64_t l = lcm_vertex_orders(r);
    for (std::int64_t k = 1; k <= 4; ++k) {
      const std::int64_t rank = free_rank(r, k * l);
      if (rank < 2 || is_dihedral_type(r)) continue;
      const auto b = check_bounds(r, k * l);
      EXPECT_TRUE(b.vertex_bound_checked && b.edge_bound_checked);
      EXPECT_TRUE(b.all_hold()) << "trial " << t << " index " << k * l;
      ++checked;
    }
  }
  EXPECT_GT(checked, 100U);
}
