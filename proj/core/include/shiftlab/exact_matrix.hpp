#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace shiftlab {

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Rank is always taken over the rationals. Entries are never converted to
/// floating point; elimination works on integers only (fraction-free).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries);

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Copy of the leading `count` columns.
  ExactMatrix left_columns(std::size_t count) const;
  ExactMatrix transposed() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Rank over Q by Bareiss fraction-free elimination. Pivot = first nonzero in
/// the current column.
std::size_t rank_exact(const ExactMatrix& m);

/// Vertical concatenation. An empty operand (0 rows) is accepted with any
/// column count; otherwise the column counts must agree (InputError).
ExactMatrix stack_rows(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace shiftlab
