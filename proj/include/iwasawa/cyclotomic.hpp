#pragma once

#include <gmpxx.h>

#include <string_view>

#include "iwasawa/poly.hpp"

namespace iwasawa {

enum class Sign { Plus, Minus };

std::string_view to_string(Sign s);
char sign_char(Sign s);

/// The p^n-cyclotomic polynomial in the Iwasawa variable:
/// Phi_0 = x and Phi_n = ((1+x)^(p^n) - 1) / ((1+x)^(p^(n-1)) - 1).
/// Built from the closed form sum_{k<p} (1+x)^(k p^(n-1)), no division.
IntPoly phi_poly(unsigned long p, unsigned n);

/// omega_n = (1+x)^(p^n) - 1.
IntPoly omega_poly(unsigned long p, unsigned n);

/// Product of Phi_i over i <= n with i even (Plus, includes i = 0) or odd (Minus).
IntPoly omega_tilde(unsigned long p, unsigned n, Sign sign);

/// Degree of Phi_n: 1 for n = 0, p^(n-1)(p-1) otherwise.
unsigned long phi_degree(unsigned long p, unsigned n);

/// Classical cyclotomic polynomial (minimal polynomial of a primitive k-th
/// root of unity over Q), by exact division of x^k - 1.
IntPoly classical_cyclotomic(unsigned long k);

/// A * omega~+_n + B * omega~-_n = p^m over Z[x].
struct BezoutCertificate {
  IntPoly plus_cofactor;   // A
  IntPoly minus_cofactor;  // B
  unsigned m = 0;
};

/// Fraction-free extended Euclid (primitive remainder sequence carrying
/// cofactors); the final row is made primitive, so the constant it
/// reaches is the least common denominator of the rational Bezout pair.
BezoutCertificate bezout_p_power(unsigned long p, unsigned n);

/// Re-expands the certificate; true iff it equals p^m exactly.
bool check_bezout(unsigned long p, unsigned n, const BezoutCertificate& cert);

}  // namespace iwasawa
