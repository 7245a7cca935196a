#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "iwasawa/group_reps.hpp"
#include "iwasawa/poly.hpp"
#include "iwasawa/rank_data.hpp"

// Deliberately naive reference computations and random instance generators
// shared by the oracle suite, the tests and the acceptance run.
namespace iwasawa::oracles {

/// #{1 <= k <= m : gcd(k, m) = 1}, by counting.
std::uint64_t brute_unit_count(std::uint64_t m);

/// Order of a modulo m by repeated multiplication; a must be a unit.
std::uint64_t brute_order(std::uint64_t a, std::uint64_t m);

/// (star) for modulus m and odd prime p: strip p from m, then compare the
/// orbit of p with the unit group.
bool brute_star_pass(std::uint64_t m, std::uint64_t p);

/// Same layout as star_table; unit counts are shared across primes.
std::vector<std::uint8_t> brute_star_table(std::uint64_t max_m, const std::vector<std::uint64_t>& primes);

/// Phi_0 * ... * Phi_n with schoolbook products.
IntPoly phi_product_schoolbook(unsigned long p, unsigned n);

using Rng = std::mt19937_64;

/// Up to three cyclic factors over primes <= 13 with order <= max_order.
FiniteAbelianGroup random_group(Rng& rng, std::uint64_t max_order, RepeatedPrimes policy);

/// Groups with |A(G)| <= max_tuples and order <= max_order, distinct primes.
FiniteAbelianGroup random_small_lattice_group(Rng& rng, std::uint64_t max_tuples, std::uint64_t max_order);

std::uint64_t random_odd_prime(Rng& rng, std::uint64_t max_p);

/// Entries uniform in [0, max_entry].
EAlphaTable random_e_alpha(Rng& rng, const FiniteAbelianGroup& g, unsigned max_level, unsigned max_entry);

std::vector<std::uint64_t> random_e_vector(Rng& rng, unsigned length, unsigned max_entry);

}  // namespace iwasawa::oracles
