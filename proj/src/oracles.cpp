#include "iwasawa/oracles.hpp"

#include <numeric>

#include "iwasawa/arith.hpp"
#include "iwasawa/cyclotomic.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa::oracles {

namespace {

constexpr std::uint64_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13};

std::uint64_t strip(std::uint64_t m, std::uint64_t p) {
  while (m % p == 0) m /= p;
  return m;
}

bool pass_with_units(std::uint64_t m_prime, std::uint64_t p, std::uint64_t units) {
  if (m_prime <= 2) return true;
  return brute_order(p % m_prime, m_prime) == units;
}

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

}  // namespace

std::uint64_t brute_unit_count(std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k < m; ++k) c += std::gcd(k, m) == 1;
  return c;
}

std::uint64_t brute_order(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  if (std::gcd(a, m) != 1) throw Error(ErrorCode::InvalidArgument, "brute_order: not a unit");
  std::uint64_t x = a % m;
  std::uint64_t k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

bool brute_star_pass(std::uint64_t m, std::uint64_t p) {
  const std::uint64_t mp = strip(m, p);
  return pass_with_units(mp, p, brute_unit_count(mp));
}

std::vector<std::uint8_t> brute_star_table(std::uint64_t max_m, const std::vector<std::uint64_t>& primes) {
  std::vector<std::uint64_t> units(max_m + 1, 0);
  for (std::uint64_t m = 1; m <= max_m; ++m) units[m] = brute_unit_count(m);
  std::vector<std::uint8_t> table(max_m * primes.size(), 0);
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    for (std::size_t j = 0; j < primes.size(); ++j) {
      const std::uint64_t mp = strip(m, primes[j]);
      table[(m - 1) * primes.size() + j] = pass_with_units(mp, primes[j], units[mp]);
    }
  }
  return table;
}

IntPoly phi_product_schoolbook(unsigned long p, unsigned n) {
  IntPoly acc{1};
  for (unsigned i = 0; i <= n; ++i) acc = multiply_schoolbook(acc, phi_poly(p, i));
  return acc;
}

FiniteAbelianGroup random_group(Rng& rng, std::uint64_t max_order, RepeatedPrimes policy) {
  for (;;) {
    const auto rank = uniform(rng, 0, 3);
    std::vector<PrimePowerFactor> factors;
    std::uint64_t order = 1;
    bool ok = true;
    for (std::uint64_t i = 0; i < rank && ok; ++i) {
      const std::uint64_t q = kSmallPrimes[uniform(rng, 0, std::size(kSmallPrimes) - 1)];
      const auto n = static_cast<unsigned>(uniform(rng, 1, 3));
      for (const auto& f : factors) ok = ok && (policy == RepeatedPrimes::Allow || f.p != q);
      const std::uint64_t c = arith::ipow(q, n);
      ok = ok && order * c <= max_order;
      order *= c;
      factors.push_back({q, n});
    }
    if (ok) return FiniteAbelianGroup::make(std::move(factors), policy);
  }
}

FiniteAbelianGroup random_small_lattice_group(Rng& rng, std::uint64_t max_tuples, std::uint64_t max_order) {
  for (;;) {
    FiniteAbelianGroup g = random_group(rng, max_order, RepeatedPrimes::Reject);
    std::uint64_t tuples = 1;
    for (const auto& f : g.factors()) tuples *= f.n + 1;
    if (tuples <= max_tuples) return g;
  }
}

std::uint64_t random_odd_prime(Rng& rng, std::uint64_t max_p) {
  for (;;) {
    const std::uint64_t q = uniform(rng, 3, max_p);
    if (arith::is_prime(q)) return q;
  }
}

EAlphaTable random_e_alpha(Rng& rng, const FiniteAbelianGroup& g, unsigned max_level, unsigned max_entry) {
  EAlphaTable t;
  t.max_level = max_level;
  for (const auto& alpha : enumerate_index_tuples(g)) {
    auto& row = t.values[alpha];
    for (unsigned k = 0; k <= max_level; ++k) row.push_back(uniform(rng, 0, max_entry));
  }
  return t;
}

std::vector<std::uint64_t> random_e_vector(Rng& rng, unsigned length, unsigned max_entry) {
  std::vector<std::uint64_t> e(length);
  for (auto& x : e) x = uniform(rng, 0, max_entry);
  return e;
}

}  // namespace iwasawa::oracles
