#include "iwasawa/group_reps.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "iwasawa/arith.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa {

FiniteAbelianGroup FiniteAbelianGroup::make(std::vector<PrimePowerFactor> factors,
                                            RepeatedPrimes policy) {
  std::set<unsigned long> seen;
  for (const auto& f : factors) {
    if (!arith::is_prime(f.p)) {
      throw Error(ErrorCode::InvalidGroup, "factor prime " + std::to_string(f.p) + " is not prime");
    }
    if (f.n == 0) {
      throw Error(ErrorCode::InvalidGroup,
                  "factor Z/" + std::to_string(f.p) + "^0 must have exponent n >= 1");
    }
    if (!seen.insert(f.p).second && policy == RepeatedPrimes::Reject) {
      throw Error(ErrorCode::RepeatedPrimes,
                  "prime " + std::to_string(f.p) +
                      " repeats in the factorisation; rational irreps are then reducible "
                      "(pass the repeated-primes override to proceed)");
    }
  }
  FiniteAbelianGroup g;
  g.factors_ = std::move(factors);
  (void)g.order();  // overflow check
  return g;
}

std::uint64_t FiniteAbelianGroup::cyclic_order(std::size_t i) const {
  return arith::ipow(factors_.at(i).p, factors_.at(i).n);
}

std::uint64_t FiniteAbelianGroup::order() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint64_t q = cyclic_order(i);
    if (n > UINT64_MAX / q) throw Error(ErrorCode::InvalidGroup, "group order overflows 64 bits");
    n *= q;
  }
  return n;
}

std::uint64_t FiniteAbelianGroup::exponent() const {
  std::uint64_t m = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) m = std::lcm(m, cyclic_order(i));
  return m;
}

bool FiniteAbelianGroup::distinct_support() const {
  std::set<unsigned long> seen;
  for (const auto& f : factors_) {
    if (!seen.insert(f.p).second) return false;
  }
  return true;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i > 0) out << " x ";
    out << "Z/" << cyclic_order(i);
  }
  return out.str();
}

std::string IndexTuple::key() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

IndexTuple IndexTuple::parse_key(const std::string& key) {
  IndexTuple t;
  if (key.empty()) return t;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = key.find(',', start);
    const std::string part = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 9) {
      throw Error(ErrorCode::InvalidTuple, "malformed tuple key \"" + key + "\"");
    }
    t.entries.push_back(static_cast<unsigned>(std::stoul(part)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return t;
}

std::vector<IndexTuple> enumerate_index_tuples(const FiniteAbelianGroup& g) {
  std::vector<IndexTuple> out;
  IndexTuple cur{std::vector<unsigned>(g.rank(), 0)};
  while (true) {
    out.push_back(cur);
    std::size_t i = g.rank();
    while (i > 0) {
      --i;
      if (cur.entries[i] < g.factors()[i].n) {
        ++cur.entries[i];
        break;
      }
      cur.entries[i] = 0;
      if (i == 0) return out;
    }
    if (g.rank() == 0) return out;
  }
}

bool tuple_leq(const IndexTuple& a, const IndexTuple& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "tuples (" + a.key() + ") and (" + b.key() +
                                               ") have different lengths");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void validate_tuple(const FiniteAbelianGroup& g, const IndexTuple& alpha) {
  if (alpha.size() != g.rank()) {
    throw Error(ErrorCode::InvalidTuple, "tuple (" + alpha.key() + ") has length " +
                                             std::to_string(alpha.size()) + ", group has " +
                                             std::to_string(g.rank()) + " factors");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] > g.factors()[i].n) {
      throw Error(ErrorCode::InvalidTuple,
                  "tuple (" + alpha.key() + ") entry " + std::to_string(i) + " exceeds n_i = " +
                      std::to_string(g.factors()[i].n));
    }
  }
}

std::uint64_t irrep_dim(const FiniteAbelianGroup& g, const IndexTuple& alpha) {
  validate_tuple(g, alpha);
  std::uint64_t d = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    d *= arith::prime_power_totient(g.factors()[i].p, alpha[i]);
  }
  return d;
}

std::vector<IrrepDescriptor> irreps(const FiniteAbelianGroup& g) {
  std::vector<IrrepDescriptor> out;
  for (auto& t : enumerate_index_tuples(g)) {
    const auto d = irrep_dim(g, t);
    out.push_back({std::move(t), d});
  }
  return out;
}

std::uint64_t fixed_subspace_dim(const FiniteAbelianGroup& g, const IndexTuple& beta,
                                 const IndexTuple& alpha) {
  validate_tuple(g, beta);
  validate_tuple(g, alpha);
  return tuple_leq(beta, alpha) ? irrep_dim(g, beta) : 0;
}

std::uint64_t quotient_order(const FiniteAbelianGroup& g, const IndexTuple& alpha) {
  validate_tuple(g, alpha);
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i) n *= arith::ipow(g.factors()[i].p, alpha[i]);
  return n;
}

std::uint64_t regular_dimension_sum(const FiniteAbelianGroup& g) {
  std::uint64_t sum = 0;
  for (const auto& t : enumerate_index_tuples(g)) sum += irrep_dim(g, t);
  return sum;
}

}  // namespace iwasawa
