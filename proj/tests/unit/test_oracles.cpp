#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "shiftlab/algebraic.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/oracles.hpp"

using namespace shiftlab;

namespace {

int choose2(int n) { return n * (n - 1) / 2; }

}  // namespace

TEST(BinomialForm, Examples) {
  EXPECT_EQ(binomial_form(1), (BinomialForm{1, 1}));
  EXPECT_EQ(binomial_form(6), (BinomialForm{3, 3}));
  EXPECT_EQ(binomial_form(12), (BinomialForm{5, 2}));
  EXPECT_THROW(binomial_form(0), InputError);
}

TEST(BinomialForm, UniqueUpToTenThousand) {
  for (int n = 1; n <= 10000; ++n) {
    const BinomialForm f = binomial_form(n);
    ASSERT_EQ(choose2(f.h) + f.alpha, n);
    ASSERT_GT(f.alpha, 0);
    ASSERT_LE(f.alpha, f.h);
    int solutions = 0;
    for (int h = 1; choose2(h) < n; ++h) {
      const int alpha = n - choose2(h);
      if (alpha > 0 && alpha <= h) ++solutions;
    }
    ASSERT_EQ(solutions, 1) << n;
  }
}

TEST(KabProfiles, Examples) {
  EXPECT_EQ(kab_exterior_profile(3, 3).cumulative(), (std::vector<int>{5, 8, 9, 9, 9}));
  EXPECT_EQ(kab_exterior_profile(6, 6).cumulative(),
            (std::vector<int>{11, 20, 27, 32, 35, 36, 36, 36, 36, 36, 36}));
  EXPECT_EQ(kab_exterior_profile(1, 1).cumulative(), (std::vector<int>{1}));
  EXPECT_EQ(kab_symmetric_profile(3, 3).cumulative(), (std::vector<int>{5, 9, 9, 9, 9}));
  EXPECT_EQ(kab_symmetric_profile(6, 6).cumulative(),
            (std::vector<int>{11, 21, 30, 35, 36, 36, 36, 36, 36, 36, 36}));
  EXPECT_EQ(kab_symmetric_profile(1, 1).cumulative(), (std::vector<int>{1}));
  EXPECT_THROW(kab_exterior_profile(2, 3), InputError);
  EXPECT_THROW(kab_symmetric_profile(3, 0), InputError);
}

TEST(KabProfiles, AgreeWithComputedShifts) {
  GenericConfig cfg;
  cfg.seed = 77;
  cfg.pad_check = true;
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= a; ++b) {
      const Graph g = complete_bipartite(a, b);
      ASSERT_EQ(exterior_profile(g, cfg), kab_exterior_profile(a, b)) << a << "," << b;
      ASSERT_EQ(symmetric_profile(g, cfg), kab_symmetric_profile(a, b)) << a << "," << b;
      const bool differ = !(kab_exterior_profile(a, b) == kab_symmetric_profile(a, b));
      if (b >= 3) ASSERT_TRUE(differ) << a << "," << b;
      if (b <= 2) ASSERT_FALSE(differ) << a << "," << b;
    }
  }
}

TEST(BettiFormula, Examples) {
  EXPECT_EQ(betti_shifted_formula(Graph(3, {{1, 2}, {1, 3}}), 1), 0u);
  EXPECT_EQ(betti_shifted_formula(Graph::edgeless(3), 1), 2u);
  for (int n = 2; n <= 8; ++n)
    for (int i = 0; i <= n - 2; ++i) EXPECT_EQ(betti_shifted_formula(complete_graph(n), i), 0u);
  EXPECT_THROW(betti_shifted_formula(Graph(3, {{2, 3}}), 0), InputError);
  EXPECT_THROW(betti_shifted_formula(Graph::edgeless(3), 2), InputError);
}

TEST(BettiFormula, MatchesHochsterOnEveryShiftedGraphUpToTen) {
  for (int n = 2; n <= 10; ++n) {
    for (const Graph& g : oracle::all_shifted_graphs(n)) {
      for (int i = 0; i <= n - 2; ++i) ASSERT_EQ(betti_shifted_formula(g, i), betti_hochster(g, i));
    }
  }
}

TEST(BettiFormula, ShiftedGraphsAreDeterminedByBettiNumbers) {
  for (int n = 2; n <= 8; ++n) {
    std::map<std::vector<std::uint64_t>, Graph> seen;
    for (const Graph& g : oracle::all_shifted_graphs(n)) {
      std::vector<std::uint64_t> betti;
      for (int i = 0; i <= n - 2; ++i) betti.push_back(betti_shifted_formula(g, i));
      auto [it, fresh] = seen.emplace(betti, g);
      ASSERT_TRUE(fresh) << "two shifted graphs share Betti numbers on n = " << n;
    }
  }
}

TEST(SandwichCheck, Examples) {
  EXPECT_TRUE(bipartite_sandwich_check(kab_exterior_profile(3, 3), kab_symmetric_profile(3, 3), 6));
  EXPECT_TRUE(bipartite_sandwich_check(kab_exterior_profile(6, 6), kab_symmetric_profile(6, 6), 12));
  // s(1) = 5 may not exceed e(2) = 4.
  const MProfile e = MProfile::from_cumulative(6, {3, 4, 4, 4, 4});
  const MProfile s = MProfile::from_cumulative(6, {5, 5, 5, 5, 5});
  EXPECT_FALSE(bipartite_sandwich_check(e, s, 6));
  EXPECT_THROW(bipartite_sandwich_check(e, s, 7), InputError);
}

TEST(CoroPredicate, Examples) {
  GenericConfig cfg;
  const Graph e33 = exterior_shift(complete_bipartite(3, 3), cfg);
  EXPECT_TRUE(coro_predicate(e33));
  EXPECT_NE(e33, symmetric_shift(complete_bipartite(3, 3), cfg));
  EXPECT_FALSE(coro_predicate(Graph(2, {{1, 2}})));
  EXPECT_TRUE(coro_predicate(graph_from_profile(kab_exterior_profile(6, 6))));
}
