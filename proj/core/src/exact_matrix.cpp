#include "shiftlab/exact_matrix.hpp"

#include <utility>

#include "shiftlab/errors.hpp"

namespace shiftlab {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw InputError("ExactMatrix: entry count does not match rows x cols");
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::left_columns(std::size_t count) const {
  if (count > cols_) throw InputError("left_columns: count exceeds column count");
  ExactMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, c);
  return out;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

std::size_t rank_exact(const ExactMatrix& m) {
  ExactMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  mpz_class prev_pivot = 1;
  mpz_class t;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = col; c < cols; ++c) swap(a(pivot, c), a(rank, c));
    }
    const mpz_class& p = a(rank, col);
    // Every 2x2 minor below is divisible by the previous pivot (Sylvester's
    // identity), so the division is exact and entries stay integral.
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mpz_class lead = a(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) {
        t = p * a(r, c);
        t -= lead * a(rank, c);
        mpz_divexact(a(r, c).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a(r, col) = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

ExactMatrix stack_rows(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw InputError("stack_rows: column counts differ");
  ExactMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

}  // namespace shiftlab
