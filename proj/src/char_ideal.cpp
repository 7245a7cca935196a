#include "iwasawa/char_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "iwasawa/arith.hpp"
#include "iwasawa/cyclotomic.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

bool divides(const IntPoly& d, const IntPoly& a) {
  try {
    (void)divide_exact(a, d);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InexactDivision) throw;
    return false;
  }
}

void insert_extra(std::vector<std::pair<IntPoly, unsigned long>>& extra, const IntPoly& g,
                  unsigned long exponent) {
  auto it = std::lower_bound(extra.begin(), extra.end(), g, [](const auto& entry, const IntPoly& v) {
    return canonical_less(entry.first, v);
  });
  if (it != extra.end() && it->first == g) {
    it->second += exponent;
  } else {
    extra.insert(it, {g, exponent});
  }
}

}  // namespace

CharIdeal::CharIdeal(unsigned long p) : p_(p) {
  if (p == 2) throw Error(ErrorCode::EvenPrime, "p = 2 is not supported");
  if (!arith::is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

CharIdeal CharIdeal::from_exponents(unsigned long p, unsigned long mu,
                                    const std::map<unsigned, unsigned long>& cyclo) {
  CharIdeal c(p);
  c.mu_ = mu;
  for (auto [n, e] : cyclo) c.multiply_cyclo(n, e);
  return c;
}

unsigned long CharIdeal::cyclo_exponent(unsigned n) const {
  auto it = cyclo_.find(n);
  return it == cyclo_.end() ? 0 : it->second;
}

CharIdeal& CharIdeal::multiply_cyclo(unsigned n, unsigned long exponent) {
  if (exponent > 0) cyclo_[n] += exponent;
  return *this;
}

CharIdeal& CharIdeal::multiply_mu(unsigned long exponent) {
  mu_ += exponent;
  return *this;
}

CharIdeal& CharIdeal::multiply_extra(const IntPoly& g, unsigned long exponent) {
  if (exponent == 0) return *this;
  if (g.degree() < 1 || !g.is_distinguished(p_)) {
    throw Error(ErrorCode::InvalidArgument,
                "extra factor " + g.to_string() + " is not a distinguished polynomial");
  }
  const auto deg = static_cast<unsigned long>(g.degree());
  for (unsigned n = 0; phi_degree(p_, n) <= deg; ++n) {
    if (divides(phi_poly(p_, n), g)) {
      throw Error(ErrorCode::InvalidArgument, "extra factor " + g.to_string() +
                                                  " is divisible by Phi_" + std::to_string(n));
    }
  }
  insert_extra(extra_, g, exponent);
  return *this;
}

Invariants CharIdeal::invariants() const {
  Invariants inv;
  inv.mu = mu_;
  for (auto [n, e] : cyclo_) inv.lambda += e * phi_degree(p_, n);
  for (const auto& [g, e] : extra_) inv.lambda += e * static_cast<unsigned long>(g.degree());
  return inv;
}

IntPoly CharIdeal::generator() const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), p_, mu_);
  IntPoly acc = IntPoly::constant(scale);
  for (auto [n, e] : cyclo_) acc *= power(phi_poly(p_, n), static_cast<unsigned>(e));
  for (const auto& [g, e] : extra_) acc *= power(g, static_cast<unsigned>(e));
  return acc;
}

std::string CharIdeal::to_text() const {
  std::ostringstream out;
  out << p_ << "^" << mu_;
  for (auto [n, e] : cyclo_) {
    if (n == 0) {
      out << " * x^" << e;
    } else {
      out << " * Phi(" << n << ")^" << e;
    }
  }
  for (const auto& [g, e] : extra_) out << " * (" << g.to_string() << ")^" << e;
  return out.str();
}

CharIdeal operator*(const CharIdeal& a, const CharIdeal& b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::PrimeMismatch, "ideals over different primes");
  CharIdeal out = a;
  out.mu_ += b.mu_;
  for (auto [n, e] : b.cyclo_) out.cyclo_[n] += e;
  for (const auto& [g, e] : b.extra_) insert_extra(out.extra_, g, e);
  return out;
}

CharIdeal char_gcd(const CharIdeal& a, const CharIdeal& b) {
  if (a.prime() != b.prime()) {
    throw Error(ErrorCode::PrimeMismatch, "gcd of ideals over p = " + std::to_string(a.prime()) +
                                              " and p = " + std::to_string(b.prime()));
  }
  CharIdeal out(a.prime());
  out.multiply_mu(std::min(a.mu(), b.mu()));
  for (auto [n, e] : a.cyclo()) out.multiply_cyclo(n, std::min(e, b.cyclo_exponent(n)));
  for (const auto& [g, e] : a.extra()) {
    for (const auto& [h, f] : b.extra()) {
      if (g == h) out.multiply_extra(g, std::min(e, f));
    }
  }
  return out;
}

}  // namespace iwasawa
