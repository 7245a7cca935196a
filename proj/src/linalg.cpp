#include "iwasawa/linalg.hpp"

#include <algorithm>
#include <utility>

#include "iwasawa/error.hpp"

namespace iwasawa::linalg {

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
}

void IntMatrix::append_rows(const IntMatrix& other) {
  if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
  if (other.cols_ != cols_) throw Error(ErrorCode::LengthMismatch, "column count mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void IntMatrix::append_row(const Vector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw Error(ErrorCode::LengthMismatch, "row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vector>& columns, std::size_t length) {
  IntMatrix m(length, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != length) throw Error(ErrorCode::LengthMismatch, "column length mismatch");
    for (std::size_t r = 0; r < length; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Reduced gauss_jordan(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      if (best == rows || mpz_cmpabs(m(i, c).get_mpz_t(), m(best, c).get_mpz_t()) < 0) best = i;
      if (mpz_cmpabs_ui(m(best, c).get_mpz_t(), 1) == 0) break;
    }
    if (best == rows) continue;
    m.swap_rows(best, r);
    const mpz_class piv = m(r, c);
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r) continue;
      const mpz_class f = m(k, c);
      bool zero_row = sgn(f) == 0;
      if (zero_row) {
        for (std::size_t j = 0; j < cols && zero_row; ++j) zero_row = sgn(m(k, j)) == 0;
        if (zero_row) continue;
      }
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        mpz_class& e = m(k, j);
        mpz_mul(e.get_mpz_t(), e.get_mpz_t(), piv.get_mpz_t());
        if (sgn(f) != 0) mpz_submul(e.get_mpz_t(), f.get_mpz_t(), m(r, j).get_mpz_t());
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
      m(k, c) = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots), prev};
}

std::size_t rank(IntMatrix m) { return gauss_jordan(std::move(m)).pivot_cols.size(); }

std::size_t rank_mod(const IntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    a[i] = mpz_fdiv_ui(m(i / cols, i % cols).get_mpz_t(), p);
  }
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1;
    for (std::uint64_t e = p - 2; e; e >>= 1, x = x * x % p) {
      if (e & 1) result = result * x % p;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);
    }
    const std::uint64_t inv = inverse(a[rank * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[rank * cols + j] = a[rank * cols + j] * inv % p;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = a[r * cols + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[r * cols + j] = (a[r * cols + j] + (p - f) * a[rank * cols + j]) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<Vector> kernel_basis(IntMatrix m) {
  const std::size_t cols = m.cols();
  Reduced red = gauss_jordan(std::move(m));
  std::vector<bool> is_pivot(cols, false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = red.scale;
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) v[red.pivot_cols[i]] = -red.matrix(i, f);
    mpz_class g;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace iwasawa::linalg
