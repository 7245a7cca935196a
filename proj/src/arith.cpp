#include "iwasawa/arith.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "iwasawa/error.hpp"

namespace iwasawa::arith {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorCode::InvalidArgument,
                  "integer overflow computing " + std::to_string(base) + "^" +
                      std::to_string(exp));
    }
    result *= base;
  }
  return result;
}

std::uint64_t prime_power_totient(std::uint64_t p, unsigned k) {
  if (k == 0) return 1;
  return ipow(p, k - 1) * (p - 1);
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t result = 1;
  for (auto [q, k] : factorize(n)) result *= prime_power_totient(q, k);
  return result;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "order modulo zero");
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1) {
    throw Error(ErrorCode::InvalidArgument,
                std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  std::uint64_t order = totient(m);
  for (auto [q, k] : factorize(order)) {
    for (unsigned i = 0; i < k && order % q == 0; ++i) {
      if (powmod(a, order / q, m) != 1) break;
      order /= q;
    }
  }
  return order;
}

}  // namespace iwasawa::arith
