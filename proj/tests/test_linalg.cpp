#include <doctest.h>

#include <random>

#include "iwasawa/linalg.hpp"

using namespace iwasawa::linalg;

namespace {

// Textbook reduced row echelon form over Q.
std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<long> d(-3, 3);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng() % 2 ? d(rng) : 0;
  }
  // Force dependencies now and then.
  if (rows >= 3 && rng() % 2) {
    for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c) - m(1, c);
  }
  return m;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  IntMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  CHECK(rank(m) == 1);
  CHECK(rank(IntMatrix(3, 4)) == 0);
}

TEST_CASE("property: fraction-free rank equals rational RREF rank") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const IntMatrix m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7);
    CHECK(rank(m) == rational_rank(m));
  }
}

TEST_CASE("rank mod p drops only when p divides a minor") {
  IntMatrix m(2, 2);
  m(0, 0) = 1;
  m(1, 1) = 7;
  CHECK(rank_mod(m, 7) == 1);
  CHECK(rank_mod(m, 5) == 2);
  m(0, 1) = -3;
  CHECK(rank_mod(m, 2147483647u) == 2);
}

TEST_CASE("property: rank mod a large prime matches the rational rank") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const IntMatrix m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7);
    CHECK(rank_mod(m, 2147483647u) == rational_rank(m));
    CHECK(rank_mod(m, 3) <= rational_rank(m));
  }
}

TEST_CASE("property: kernel basis is a primitive basis of the null space") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const IntMatrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 7);
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == m.cols() - rational_rank(m));
    for (const auto& v : ker) {
      mpz_class g = 0;
      for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      CHECK(g == 1);
      for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
        CHECK(s == 0);
      }
    }
    if (!ker.empty()) CHECK(rational_rank(IntMatrix::from_columns(ker, m.cols())) == ker.size());
  }
}

TEST_CASE("gauss_jordan pivots carry the common scale") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const Reduced red = gauss_jordan(random_matrix(rng, 5, 5));
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
      const std::size_t c = red.pivot_cols[k];
      for (std::size_t r = 0; r < red.matrix.rows(); ++r) {
        CHECK(red.matrix(r, c) == (r == k ? red.scale : mpz_class(0)));
      }
    }
  }
}
