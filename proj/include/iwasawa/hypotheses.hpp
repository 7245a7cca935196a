#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/group_reps.hpp"

namespace iwasawa {

/// An abelian number field K, described by Gal(K/Q) and its conductor.
struct FieldDescriptor {
  FiniteAbelianGroup group;
  std::uint64_t conductor = 1;

  /// Throws HypothesisField unless exp(G) divides phi(conductor).
  static FieldDescriptor make(FiniteAbelianGroup group, std::uint64_t conductor);
};

struct CurveData {
  std::string label;
  std::map<std::uint64_t, long> ap;
  std::optional<std::uint64_t> rank;
  std::optional<std::uint64_t> conductor;

  friend bool operator==(const CurveData&, const CurveData&) = default;
};

/// Throws HasseBound if some stored a_ell has |a_ell| > 2 sqrt(ell) at a
/// prime of good reduction (bad primes are known only when conductor is set).
void check_hasse(const CurveData& c);

/// a^2 <= 4 ell, exactly.
bool within_hasse(long a, std::uint64_t ell);

enum class Reduction { Ordinary, Supersingular, Unsupported };

std::string_view to_string(Reduction r);

std::uint64_t group_exponent(const FiniteAbelianGroup& g);

struct StarWitness {
  unsigned r = 0;              // v_p(m)
  std::uint64_t m_prime = 1;   // m / p^r
  std::uint64_t order = 1;     // ord of p mod m'
  std::uint64_t totient = 1;   // phi(m')
};

struct StarVerdict {
  bool pass = false;
  std::uint64_t m = 1;
  StarWitness witness;
};

/// (star) for modulus m: p generates (Z/m'Z)^x, m' the prime-to-p part.
/// m' in {1, 2} passes vacuously. Throws EvenPrime for p = 2.
StarVerdict star_check_modulus(std::uint64_t m, std::uint64_t p);

StarVerdict star_check(const FiniteAbelianGroup& g, std::uint64_t p);

struct Verdict {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct HypothesisReport {
  std::vector<Verdict> verdicts;
  bool all_pass() const;
};

/// p unramified in K iff p does not divide f; K meets the cyclotomic
/// Z_p-extension trivially iff p^2 does not divide f.
HypothesisReport field_hypotheses(const FieldDescriptor& k, std::uint64_t p);

/// Throws HasseBound outside |a_p| <= 2 sqrt(p), EvenPrime for p = 2.
Reduction reduction_type(long ap, std::uint64_t p);

}  // namespace iwasawa
