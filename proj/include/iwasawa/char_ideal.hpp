#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "iwasawa/poly.hpp"

namespace iwasawa {

struct Invariants {
  unsigned long lambda = 0;
  unsigned long mu = 0;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// A characteristic ideal of a finitely generated torsion Lambda-module,
/// stored by its generator p^mu * prod Phi_n^e_n * prod g_j^k_j with units
/// dropped. The trivial ideal <1> has no factors at all.
///
/// Canonical form: cyclotomic exponents keyed by n (sorted, all >= 1); extra
/// factors sorted by canonical_less on the polynomial, exponents >= 1.
class CharIdeal {
 public:
  explicit CharIdeal(unsigned long p);

  /// Zero exponents are dropped.
  static CharIdeal from_exponents(unsigned long p, unsigned long mu,
                                  const std::map<unsigned, unsigned long>& cyclo);

  unsigned long prime() const { return p_; }
  unsigned long mu() const { return mu_; }
  const std::map<unsigned, unsigned long>& cyclo() const { return cyclo_; }
  const std::vector<std::pair<IntPoly, unsigned long>>& extra() const { return extra_; }

  unsigned long cyclo_exponent(unsigned n) const;
  bool is_trivial() const { return mu_ == 0 && cyclo_.empty() && extra_.empty(); }

  CharIdeal& multiply_cyclo(unsigned n, unsigned long exponent);
  CharIdeal& multiply_mu(unsigned long exponent);
  /// Throws InvalidArgument unless g is distinguished and coprime to every Phi_n.
  CharIdeal& multiply_extra(const IntPoly& g, unsigned long exponent);

  Invariants invariants() const;

  /// The generator as an explicit polynomial (expensive for high levels).
  IntPoly generator() const;

  /// e.g. "3^0 * x^1 * Phi(1)^2 * (x^2 + 3*x + 9)^1"
  std::string to_text() const;

  friend bool operator==(const CharIdeal&, const CharIdeal&) = default;
  friend CharIdeal operator*(const CharIdeal& a, const CharIdeal& b);

 private:
  unsigned long p_;
  unsigned long mu_ = 0;
  std::map<unsigned, unsigned long> cyclo_;
  std::vector<std::pair<IntPoly, unsigned long>> extra_;
};

/// Componentwise minimum of mu, cyclotomic exponents and matching extra
/// factors; throws PrimeMismatch for different primes.
CharIdeal char_gcd(const CharIdeal& a, const CharIdeal& b);

}  // namespace iwasawa
