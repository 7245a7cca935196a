#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

// Exact linear algebra over the integers, fraction-free throughout.
namespace iwasawa::linalg {

using Vector = std::vector<mpz_class>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  /// Appends the rows of `other` (same column count).
  void append_rows(const IntMatrix& other);
  void append_row(const Vector& row);

  IntMatrix transpose() const;
  static IntMatrix from_columns(const std::vector<Vector>& columns, std::size_t length);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Result of fraction-free Gauss-Jordan elimination (Bareiss updates applied
/// to every row). In the reduced matrix each pivot entry equals `scale`, and
/// every other entry of a pivot column is zero.
struct Reduced {
  IntMatrix matrix;
  std::vector<std::size_t> pivot_cols;
  mpz_class scale;  // common pivot value; 1 when rank is 0
};

Reduced gauss_jordan(IntMatrix m);

std::size_t rank(IntMatrix m);

/// Rank of M reduced mod the prime p (p < 2^32). Never exceeds rank(M).
std::size_t rank_mod(const IntMatrix& m, std::uint32_t p);

/// Primitive integer basis of the right kernel {v : M v = 0}, one vector per
/// non-pivot column.
std::vector<Vector> kernel_basis(IntMatrix m);

}  // namespace iwasawa::linalg
