#include "iwasawa/cyclotomic.hpp"

#include <string>
#include <utility>

#include "iwasawa/arith.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

void require_odd_prime(unsigned long p) {
  if (p == 2) throw Error(ErrorCode::EvenPrime, "p = 2 is not supported; p must be an odd prime");
  if (!arith::is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  }
}

// One row of the remainder sequence: s * f + t * g = r.
struct Row {
  IntPoly r, s, t;
};

void make_primitive(Row& row) {
  mpz_class g = row.r.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.s.content().get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.t.content().get_mpz_t());
  if (g > 1) {
    row.r.divide_coefficients(g);
    row.s.divide_coefficients(g);
    row.t.divide_coefficients(g);
  }
}

}  // namespace

std::string_view to_string(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }
char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

unsigned long phi_degree(unsigned long p, unsigned n) {
  return n == 0 ? 1 : arith::prime_power_totient(p, n);
}

IntPoly phi_poly(unsigned long p, unsigned n) {
  require_odd_prime(p);
  if (n == 0) return IntPoly::x();
  const std::size_t step = arith::ipow(p, n - 1);
  std::vector<mpz_class> acc(step * (p - 1) + 1);
  for (unsigned long k = 0; k < p; ++k) {
    IntPoly row = binomial_power(k * step);
    for (std::size_t i = 0; i < row.size(); ++i) acc[i] += row.coeffs()[i];
  }
  return IntPoly(std::move(acc));
}

IntPoly omega_poly(unsigned long p, unsigned n) {
  require_odd_prime(p);
  return binomial_power(arith::ipow(p, n)) - IntPoly::constant(1);
}

IntPoly omega_tilde(unsigned long p, unsigned n, Sign sign) {
  require_odd_prime(p);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "omega~ requires n >= 1");
  IntPoly acc = IntPoly::constant(1);
  for (unsigned i = (sign == Sign::Plus ? 0U : 1U); i <= n; i += 2) acc *= phi_poly(p, i);
  return acc;
}

IntPoly classical_cyclotomic(unsigned long k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  IntPoly poly = IntPoly::monomial(1, k) - IntPoly::constant(1);
  for (unsigned long d = 1; d < k; ++d) {
    if (k % d == 0) poly = divide_exact(poly, classical_cyclotomic(d));
  }
  return poly;
}

BezoutCertificate bezout_p_power(unsigned long p, unsigned n) {
  const IntPoly plus = omega_tilde(p, n, Sign::Plus);
  const IntPoly minus = omega_tilde(p, n, Sign::Minus);

  // Rows track s * plus + t * minus = r; start from the higher degree.
  Row a{plus, IntPoly::constant(1), IntPoly{}};
  Row b{minus, IntPoly{}, IntPoly::constant(1)};
  if (a.r.degree() < b.r.degree()) std::swap(a, b);

  while (b.r.degree() > 0) {
    PseudoDivision pd = pseudo_divide(a.r, b.r);
    Row next{std::move(pd.remainder), a.s * pd.multiplier - pd.quotient * b.s,
             a.t * pd.multiplier - pd.quotient * b.t};
    if (next.r.is_zero()) {
      throw Error(ErrorCode::InvalidArgument, "omega~+ and omega~- share a factor");
    }
    make_primitive(next);
    a = std::move(b);
    b = std::move(next);
  }
  if (b.r.is_zero()) throw Error(ErrorCode::InvalidArgument, "remainder sequence degenerated");

  mpz_class c = b.r.leading();
  if (sgn(c) < 0) {
    c = -c;
    b.s = -b.s;
    b.t = -b.t;
  }
  unsigned m = 0;
  mpz_class rest = c;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++m;
  }
  if (rest != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "Bezout constant " + c.get_str() + " is not a power of " + std::to_string(p));
  }
  return {std::move(b.s), std::move(b.t), m};
}

bool check_bezout(unsigned long p, unsigned n, const BezoutCertificate& cert) {
  const IntPoly lhs = cert.plus_cofactor * omega_tilde(p, n, Sign::Plus) +
                      cert.minus_cofactor * omega_tilde(p, n, Sign::Minus);
  mpz_class target;
  mpz_ui_pow_ui(target.get_mpz_t(), p, cert.m);
  return lhs == IntPoly::constant(target);
}

}  // namespace iwasawa
