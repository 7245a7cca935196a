#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace iwasawa {

/// Dense polynomial over the integers in one variable x, coefficients in
/// ascending degree. Always normalized: no trailing zero coefficient, the
/// zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^i; zero beyond the degree.
  mpz_class coeff(std::size_t i) const;
  const mpz_class& leading() const { return coeffs_.back(); }
  std::span<const mpz_class> coeffs() const { return coeffs_; }

  bool is_monic() const { return !is_zero() && leading() == 1; }
  /// Monic with every non-leading coefficient divisible by p.
  bool is_distinguished(unsigned long p) const;

  /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
  mpz_class content() const;

  mpz_class evaluate(const mpz_class& at) const;

  /// Human-readable, descending degree: "x^2 + 3*x + 3".
  std::string to_string() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const mpz_class& c);
  /// Divides every coefficient by c; throws InexactDivision if any is not a multiple.
  IntPoly& divide_coefficients(const mpz_class& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Ordering by (degree, coefficients ascending); used for canonical forms.
  friend bool canonical_less(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

/// Schoolbook product; kept as the reference for the packed multiplier.
IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b);

/// Kronecker-substitution product: both operands are packed into one big
/// integer at 2^b, multiplied by GMP, and unpacked with balanced digits.
IntPoly multiply_kronecker(const IntPoly& a, const IntPoly& b);

IntPoly power(const IntPoly& base, unsigned exp);

/// q with a = q * b exactly; throws Error(InexactDivision) otherwise.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

struct PseudoDivision {
  IntPoly quotient;
  IntPoly remainder;
  mpz_class multiplier;  // lc(b)^(deg a - deg b + 1)
};

/// multiplier * a = quotient * b + remainder, deg remainder < deg b.
PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b);

/// Coefficients of (1 + x)^n.
IntPoly binomial_power(std::size_t n);

}  // namespace iwasawa
