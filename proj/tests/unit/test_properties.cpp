// Randomized invariants across modules. Seeds are fixed so failures reproduce.

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shiftlab/algebraic.hpp"
#include "shiftlab/combinatorial.hpp"
#include "shiftlab/corpus.hpp"
#include "shiftlab/oracles.hpp"

using namespace shiftlab;

namespace {

GenericConfig cfg_with_seed(std::uint64_t seed) {
  GenericConfig cfg;
  cfg.seed = seed;
  cfg.pad_check = true;
  return cfg;
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  return sigma;
}

Graph add_random_edges(const Graph& g, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) pairs.emplace_back(e.u, e.v);
  std::bernoulli_distribution coin(p);
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return Graph(g.n(), pairs);
}

std::vector<Graph> chordal_corpus(int n, int count, std::uint64_t seed) {
  CorpusSpec spec;
  spec.model = CorpusModel::chordal;
  spec.n = n;
  spec.count = count;
  spec.seed = seed;
  spec.p = 0.6;
  return gen_corpus(spec);
}

}  // namespace

TEST(Properties, AlgebraicShiftsAreMonotone) {
  const GenericConfig cfg = cfg_with_seed(1);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const Graph small = oracle::random_graph(3 + t % 6, 0.3, rng);
    const Graph big = add_random_edges(small, 0.3, rng);
    ASSERT_TRUE(is_edge_subset(small, big));
    ASSERT_TRUE(is_edge_subset(exterior_shift(small, cfg), exterior_shift(big, cfg)));
    ASSERT_TRUE(is_edge_subset(symmetric_shift(small, cfg), symmetric_shift(big, cfg)));
  }
}

TEST(Properties, ProfilesStableAcrossSeeds) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_graph(3 + t % 7, 0.5, rng);
    ASSERT_EQ(exterior_profile(g, cfg_with_seed(100)), exterior_profile(g, cfg_with_seed(200)));
    ASSERT_EQ(symmetric_profile(g, cfg_with_seed(100)), symmetric_profile(g, cfg_with_seed(200)));
  }
}

TEST(Properties, AlgebraicShiftsIgnoreLabels) {
  const GenericConfig cfg = cfg_with_seed(3);
  std::mt19937_64 rng(33);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_graph(3 + t % 6, 0.5, rng);
    const Graph h = apply_permutation(g, random_permutation(g.n(), rng));
    ASSERT_EQ(exterior_shift(g, cfg), exterior_shift(h, cfg));
    ASSERT_EQ(symmetric_shift(g, cfg), symmetric_shift(h, cfg));
  }
}

TEST(Properties, PaddingWithIsolatedVertices) {
  const GenericConfig cfg = cfg_with_seed(4);
  std::mt19937_64 rng(34);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_graph(2 + t % 7, 0.5, rng);
    const Graph padded = with_isolated_vertices(g, 1 + t % 3);
    ASSERT_EQ(exterior_shift(padded, cfg), with_isolated_vertices(exterior_shift(g, cfg), 1 + t % 3));
    ASSERT_EQ(symmetric_shift(padded, cfg), with_isolated_vertices(symmetric_shift(g, cfg), 1 + t % 3));
  }
}

TEST(Properties, LowDegreeVertexKeepsEdgeOutOfSymmetricShift) {
  // If deg(v) <= k and {k+1, k+2} is missing from the symmetric shift of g - v,
  // it is missing from the symmetric shift of g as well.
  const GenericConfig cfg = cfg_with_seed(5);
  std::mt19937_64 rng(35);
  int exercised = 0;
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_graph(4 + t % 5, 0.3 + 0.1 * (t % 4), rng);
    const Vertex v = static_cast<Vertex>(1 + rng() % g.n());
    const Graph rest = symmetric_shift(delete_vertex(g, v), cfg);
    const Graph whole = symmetric_shift(g, cfg);
    for (int k = g.degree(v); k + 2 <= g.n() - 1; ++k) {
      if (rest.has_edge(k + 1, k + 2)) continue;
      ++exercised;
      ASSERT_FALSE(whole.has_edge(k + 1, k + 2)) << "case " << t << " k " << k;
    }
  }
  EXPECT_GT(exercised, 100);
}

TEST(Properties, EnumerationIgnoresLabels) {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(3 + t % 5, 0.45, rng);
    const Graph h = apply_permutation(g, random_permutation(g.n(), rng));
    ASSERT_EQ(enumerate_combinatorial_shifted_graphs(g), enumerate_combinatorial_shifted_graphs(h));
  }
}

TEST(Properties, EnumeratedGraphsAreShiftedWithSameEdgeCount) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(3 + t % 6, 0.4, rng);
    const auto all = enumerate_combinatorial_shifted_graphs(g);
    ASSERT_FALSE(all.empty());
    const Graph canonical = canonical_combinatorial_shift(g).result;
    ASSERT_NE(std::find(all.begin(), all.end(), canonical), all.end());
    for (const Graph& d : all) {
      ASSERT_TRUE(is_shifted(d));
      ASSERT_EQ(d.edge_count(), g.edge_count());
    }
  }
}

TEST(Properties, ConnectedGraphsReachAFullStar) {
  std::mt19937_64 rng(38);
  int connected = 0;
  for (int t = 0; t < 80; ++t) {
    const Graph g = oracle::random_graph(3 + t % 6, 0.5, rng);
    if (!is_connected(g)) continue;
    ++connected;
    const auto all = enumerate_combinatorial_shifted_graphs(g);
    ASSERT_TRUE(std::any_of(all.begin(), all.end(), [&](const Graph& d) {
      return m_profile(d).increment(1) == g.n() - 1;
    }));
  }
  EXPECT_GT(connected, 30);
}

TEST(Properties, ChordalShiftsCoincide) {
  const GenericConfig cfg = cfg_with_seed(6);
  std::mt19937_64 rng(39);
  for (int t = 0; t < 60; ++t) {
    const Graph g = oracle::random_chordal(3 + t % 7, 0.3, rng);
    const Graph e = exterior_shift(g, cfg);
    ASSERT_EQ(e, symmetric_shift(g, cfg));
    ASSERT_EQ(e, chordal_shift_algorithm(g).result);
    for (int k = 1; k <= g.n(); ++k) ASSERT_EQ(t_count(g, k), t_count(e, k));
  }
}

TEST(Properties, ChordalConnectivityReadOffShift) {
  // k-connected iff {k, n'} is an edge of the shift, n' the non-isolated count.
  const GenericConfig cfg = cfg_with_seed(7);
  for (int n = 3; n <= 9; ++n) {
    for (const Graph& g : chordal_corpus(n, 15, static_cast<std::uint64_t>(n))) {
      const Graph e = exterior_shift(g, cfg);
      const int top = non_isolated_count(g);
      for (int k = 1; k < n; ++k) {
        const bool by_edge = k < top && e.has_edge(k, top);
        ASSERT_EQ(is_k_connected(g, k), is_k_connected(e, k));
        if (non_isolated_count(g) == n) ASSERT_EQ(is_k_connected(g, k), by_edge);
      }
    }
  }
}

TEST(Properties, ChordalBettiNumbersMatchShift) {
  const GenericConfig cfg = cfg_with_seed(8);
  for (const Graph& g : chordal_corpus(8, 40, 99)) {
    const Graph e = exterior_shift(g, cfg);
    for (int i = 0; i <= g.n() - 2; ++i) ASSERT_EQ(betti_hochster(g, i), betti_hochster(e, i));
  }
  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(betti_hochster(c4, 1), 0u);
  EXPECT_EQ(betti_hochster(exterior_shift(c4, cfg), 1), 1u);
}

TEST(Properties, EdgeAndDisjointShiftsPreserveStructure) {
  std::mt19937_64 rng(40);
  int edge_cases = 0;
  int disjoint_cases = 0;
  for (int t = 0; t < 200; ++t) {
    const Graph g = oracle::random_chordal(3 + t % 7, 0.2, rng);
    for (Vertex i = 1; i <= g.n(); ++i)
      for (Vertex j = i + 1; j <= g.n(); ++j) {
        const ShiftClass c = classify_shift(g, {i, j});
        if (c == ShiftClass::other) continue;
        const Graph h = shift_ij(g, {i, j});
        ASSERT_TRUE(is_chordal(h));
        for (int k = 1; k <= g.n(); ++k) ASSERT_EQ(t_count(g, k), t_count(h, k));
        if (c == ShiftClass::edge) {
          ++edge_cases;
          for (int k = 1; k < g.n(); ++k)
            if (is_k_connected(g, k)) ASSERT_TRUE(is_k_connected(h, k));
        } else {
          ++disjoint_cases;
        }
      }
  }
  EXPECT_GT(edge_cases, 200);
  EXPECT_GT(disjoint_cases, 200);
}
