#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Small-integer number theory used throughout: primality, totients,
// prime-power bookkeeping and multiplicative orders.
namespace iwasawa::arith {

bool is_prime(std::uint64_t n);

/// Checked integer power; throws Error(InvalidArgument) on overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Euler totient of p^k for prime p; totient(p, 0) == 1.
std::uint64_t prime_power_totient(std::uint64_t p, unsigned k);

std::uint64_t totient(std::uint64_t n);

/// Trial-division factorisation, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// p-adic valuation of a positive integer.
unsigned valuation(std::uint64_t n, std::uint64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Order of a in (Z/mZ)^x. Requires gcd(a, m) == 1; order modulo 1 is 1.
/// Computed by stripping prime factors from the group exponent.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace iwasawa::arith
