#include <gtest/gtest.h>

#include "oracles.hpp"
#include "second_evaluator.hpp"
#include "unavoidable/constants.hpp"

using namespace unavoidable;

namespace {

std::string str(const BigCount& b) { return b.str(); }

}  // namespace

TEST(Ramsey, ClosedForms) {
  for (std::size_t q = 1; q <= 10; ++q) {
    const auto r = ramsey_number(2, q);
    EXPECT_TRUE(r.exact());
    EXPECT_EQ(r.value, q);
    EXPECT_EQ(ramsey_number(q, 2).value, q);
    EXPECT_EQ(ramsey_number(1, q).value, 1);
  }
  EXPECT_THROW(ramsey_number(0, 3), std::invalid_argument);
}

TEST(Ramsey, ThreeThreeByBruteForce) {
  EXPECT_TRUE(oracle::ramsey_good_graph_exists(3, 3, 5));
  EXPECT_FALSE(oracle::ramsey_good_graph_exists(3, 3, 6));
  const auto r = ramsey_number(3, 3);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.value, 6);
  EXPECT_EQ(r.source, "exhaustive");
}

TEST(Ramsey, ExtensionSearchCounts) {
  // labelled triangle-free graphs with triangle-free complement: the
  // 5-cycle has 12 labellings
  const auto s = ramsey_exhaustive(3, 3);
  ASSERT_TRUE(s.ramsey);
  EXPECT_EQ(*s.ramsey, 6u);
  EXPECT_EQ(s.good_graphs[5], 12u);
  const auto t = ramsey_exhaustive(3, 4);
  ASSERT_TRUE(t.ramsey);
  EXPECT_EQ(*t.ramsey, 9u);
  EXPECT_EQ(ramsey_number(3, 4).source, "exhaustive");
  EXPECT_EQ(ramsey_number(4, 3).value, 9);
}

TEST(Ramsey, SmallCountsMatchEnumeration) {
  // count good graphs on v <= 5 vertices directly
  for (std::size_t v = 1; v <= 5; ++v) {
    std::vector<Edge> pairs;
    for (vertex_t a = 0; a < v; ++a)
      for (vertex_t b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Graph g(v);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
      count += !oracle::has_independent(g, 3) && !oracle::has_clique(g, 4);
    }
    EXPECT_EQ(ramsey_exhaustive(3, 4).good_graphs[v], count) << v << " vertices";
  }
}

TEST(Ramsey, BoundDominatesExact) {
  for (auto [p, q] : {std::pair{3, 3}, {3, 4}, {3, 5}, {3, 9}, {4, 4}, {4, 5}}) {
    const auto exact = ramsey_number(p, q);
    EXPECT_TRUE(exact.exact());
    EXPECT_GE(ramsey_binomial_bound(p, q), exact.value);
  }
  const auto far = ramsey_number(5, 5);
  EXPECT_FALSE(far.exact());
  EXPECT_EQ(far.value, 70);
}

TEST(TowerConstants, MOfK) {
  EXPECT_EQ(compute_M_of_K(1), 1);
  EXPECT_EQ(compute_M_of_K(2), 4);
  EXPECT_EQ(compute_M_of_K(3), 24);
  EXPECT_EQ(compute_M_of_K(10), BigCount(10) << 45);
  EXPECT_EQ(str(compute_M_of_K(10)), "351843720888320");
  EXPECT_THROW(compute_M_of_K(0), std::invalid_argument);
}

TEST(TowerConstants, TreeSize) {
  EXPECT_EQ(tree_size(BranchingVector({2, 3})), 9);
}

TEST(TowerConstants, NTraceMatchesSecondEvaluator) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const NTrace trace = compute_N_of_M(m);
    const auto expected = second::gmp_n_trace(m);
    ASSERT_EQ(trace.ks.size(), expected.size());
    for (std::size_t t = 0; t < expected.size(); ++t)
      EXPECT_EQ(str(trace.ks[t]), expected[t].get_str()) << "m=" << m << " t=" << t + 1;
    EXPECT_GE(trace.n(), trace.r_mm.value);
    for (std::size_t t = 1; t < trace.ks.size(); ++t) EXPECT_GE(trace.ks[t], trace.ks[t - 1]);
  }
  const NTrace two = compute_N_of_M(2);
  EXPECT_EQ(two.ks, (std::vector<BigCount>{2, 6}));
  EXPECT_EQ(two.c_bound, "placeholder-product");
}

TEST(TowerConstants, CustomBoundAndLimits) {
  CBound square{"square", [](const BigCount& a, const BigCount&) { return a * a; }};
  const NTrace t = compute_N_of_M(2, square);
  EXPECT_EQ(t.c_bound, "square");
  EXPECT_EQ(t.ks, (std::vector<BigCount>{2, 9}));  // R(2, 3^2)
  EXPECT_THROW(compute_N_of_M(4, default_c_bound(), 64), capacity_error);
  CBound shrink{"shrink", [](const BigCount&, const BigCount&) { return BigCount(1); }};
  EXPECT_THROW(compute_N_of_M(3, shrink), consistency_error);
}
