#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/exact_matrix.hpp"

using namespace shiftlab;

namespace {

ExactMatrix random_matrix(std::size_t rows, std::size_t cols, int spread, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

// Rank-deficient by construction: rows are combinations of `rank` seeds.
ExactMatrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t rank, std::mt19937_64& rng) {
  const ExactMatrix left = random_matrix(rows, rank, 5, rng);
  const ExactMatrix right = random_matrix(rank, cols, 5, rng);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      for (std::size_t t = 0; t < rank; ++t) m(r, c) += left(r, t) * right(t, c);
  return m;
}

}  // namespace

TEST(RankExact, Examples) {
  EXPECT_EQ(rank_exact(ExactMatrix::identity(4)), 4u);
  ExactMatrix ones(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) ones(r, c) = 1;
  EXPECT_EQ(rank_exact(ones), 1u);
  ExactMatrix vandermonde(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      mpz_class power = 1;
      for (std::size_t e = 0; e < c; ++e) power *= static_cast<long>(r + 1);
      vandermonde(r, c) = power;
    }
  EXPECT_EQ(rank_exact(vandermonde), 3u);
  EXPECT_EQ(rank_exact(ExactMatrix(0, 5)), 0u);
  EXPECT_EQ(rank_exact(ExactMatrix(3, 0)), 0u);
  EXPECT_EQ(rank_exact(ExactMatrix(4, 4)), 0u);
}

TEST(RankExact, ZeroLeadingColumnsAreSkipped) {
  ExactMatrix m(2, 3);
  m(0, 2) = 1;
  m(1, 2) = 2;
  EXPECT_EQ(rank_exact(m), 1u);
  m(1, 1) = 7;
  EXPECT_EQ(rank_exact(m), 2u);
}

TEST(RankExact, HugeEntriesStayExact) {
  // Rows differ by 1 in the last place of a 200-digit number.
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 200);
  ExactMatrix m(2, 2);
  m(0, 0) = big;
  m(0, 1) = big + 1;
  m(1, 0) = big + 1;
  m(1, 1) = big + 2;
  EXPECT_EQ(rank_exact(m), 2u);
  m(1, 0) = big * 3;
  m(1, 1) = (big + 1) * 3;
  EXPECT_EQ(rank_exact(m), 1u);
}

TEST(RankExact, AgreesWithRationalEliminationOnRandom6x6) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const ExactMatrix m =
        t % 3 == 0 ? low_rank_matrix(6, 6, 1 + t % 5, rng) : random_matrix(6, 6, 1 + t % 4, rng);
    ASSERT_EQ(rank_exact(m), oracle::rational_rank(m)) << "case " << t;
  }
}

TEST(RankExact, AgreesWithRationalEliminationOnRectangular) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + t % 9;
    const std::size_t cols = 1 + (t / 9) % 9;
    const ExactMatrix m = t % 2 ? random_matrix(rows, cols, 1, rng)
                                : low_rank_matrix(rows, cols, 1 + t % 3, rng);
    ASSERT_EQ(rank_exact(m), oracle::rational_rank(m));
  }
}

TEST(RankExact, BoundedByShapeAndInvariantUnderTransposeAndRowOrder) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const ExactMatrix m = low_rank_matrix(4 + t % 4, 3 + t % 5, 1 + t % 4, rng);
    const std::size_t r = rank_exact(m);
    EXPECT_LE(r, std::min(m.rows(), m.cols()));
    EXPECT_EQ(rank_exact(m.transposed()), r);
    std::vector<std::size_t> order(m.rows());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    ExactMatrix permuted(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t c = 0; c < m.cols(); ++c) permuted(i, c) = m(order[i], c);
    EXPECT_EQ(rank_exact(permuted), r);
  }
}

TEST(RankExact, AppendingRows) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const ExactMatrix m = random_matrix(3 + t % 3, 6, 3, rng);
    const std::size_t r = rank_exact(m);
    EXPECT_GE(rank_exact(stack_rows(m, random_matrix(1, 6, 3, rng))), r);
    ExactMatrix combo(1, 6);
    for (std::size_t row = 0; row < m.rows(); ++row) {
      const long coef = static_cast<long>(rng() % 7) - 3;
      for (std::size_t c = 0; c < 6; ++c) combo(0, c) += coef * m(row, c);
    }
    EXPECT_EQ(rank_exact(stack_rows(m, combo)), r);
  }
}

TEST(StackRows, Examples) {
  const ExactMatrix stacked = stack_rows(ExactMatrix::identity(2), ExactMatrix(1, 2));
  EXPECT_EQ(stacked.rows(), 3u);
  EXPECT_EQ(stacked.cols(), 2u);
  EXPECT_EQ(rank_exact(stacked), 2u);

  std::mt19937_64 rng(3);
  const ExactMatrix a = random_matrix(3, 4, 2, rng);
  EXPECT_EQ(stack_rows(a, ExactMatrix(0, 9)), a);
  EXPECT_EQ(stack_rows(ExactMatrix(0, 0), a), a);
  EXPECT_EQ(rank_exact(stack_rows(a, a)), rank_exact(a));
  EXPECT_THROW(stack_rows(a, ExactMatrix(1, 3)), InputError);
}

TEST(ExactMatrix, ColumnsAndTranspose) {
  ExactMatrix m(2, 3, {1, 2, 3, 4, 5, 6});
  const ExactMatrix left = m.left_columns(2);
  EXPECT_EQ(left, ExactMatrix(2, 2, {1, 2, 4, 5}));
  EXPECT_EQ(m.transposed(), ExactMatrix(3, 2, {1, 4, 2, 5, 3, 6}));
}
