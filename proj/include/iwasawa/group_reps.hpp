#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace iwasawa {

struct PrimePowerFactor {
  unsigned long p = 0;
  unsigned n = 0;
  friend bool operator==(const PrimePowerFactor&, const PrimePowerFactor&) = default;
};

enum class RepeatedPrimes { Reject, Allow };

/// G = prod Z/p_i^{n_i}Z, factors kept in the caller's order. The empty
/// factor list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Validates primality and n_i >= 1. Repeated primes throw
  /// Error(RepeatedPrimes) unless explicitly allowed.
  static FiniteAbelianGroup make(std::vector<PrimePowerFactor> factors,
                                 RepeatedPrimes policy = RepeatedPrimes::Reject);

  const std::vector<PrimePowerFactor>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  /// p_i^{n_i}
  std::uint64_t cyclic_order(std::size_t i) const;
  std::uint64_t order() const;
  std::uint64_t exponent() const;
  bool distinct_support() const;

  /// "Z/4 x Z/3", or "1" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<PrimePowerFactor> factors_;
};

/// A point alpha of the lattice A(G): 0 <= alpha_i <= n_i.
struct IndexTuple {
  std::vector<unsigned> entries;

  std::size_t size() const { return entries.size(); }
  unsigned operator[](std::size_t i) const { return entries[i]; }

  /// Comma-joined entries ("1,0"); the empty tuple is "".
  std::string key() const;
  static IndexTuple parse_key(const std::string& key);

  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
};

struct IrrepDescriptor {
  IndexTuple tuple;
  std::uint64_t dimension = 0;
};

/// All prod(n_i + 1) tuples, lexicographic in the factor order.
std::vector<IndexTuple> enumerate_index_tuples(const FiniteAbelianGroup& g);

/// Componentwise a_i <= b_i; throws LengthMismatch on different lengths.
bool tuple_leq(const IndexTuple& a, const IndexTuple& b);

/// Throws InvalidTuple unless alpha indexes a rational irrep of g.
void validate_tuple(const FiniteAbelianGroup& g, const IndexTuple& alpha);

/// dim W_alpha = prod phi(p_i^{alpha_i}).
std::uint64_t irrep_dim(const FiniteAbelianGroup& g, const IndexTuple& alpha);

std::vector<IrrepDescriptor> irreps(const FiniteAbelianGroup& g);

/// dim W_beta^{G_alpha}: all of W_beta when beta <= alpha, else 0.
std::uint64_t fixed_subspace_dim(const FiniteAbelianGroup& g, const IndexTuple& beta,
                                 const IndexTuple& alpha);

/// [G : G_alpha] = prod p_i^{alpha_i}.
std::uint64_t quotient_order(const FiniteAbelianGroup& g, const IndexTuple& alpha);

/// Sum of irrep dimensions over A(G); equals |G| for the regular representation.
std::uint64_t regular_dimension_sum(const FiniteAbelianGroup& g);

}  // namespace iwasawa
