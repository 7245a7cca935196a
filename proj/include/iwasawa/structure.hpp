#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwasawa/char_ideal.hpp"
#include "iwasawa/cyclotomic.hpp"
#include "iwasawa/hypotheses.hpp"
#include "iwasawa/rank_data.hpp"
#include "iwasawa/selmer_shape.hpp"

namespace iwasawa {

struct FineStructure {
  CharIdeal ideal;
  std::vector<std::uint64_t> exponents;  // e_n - theta_n by level
};

/// prod_n Phi_n^(e_n - theta_n), mu = 0.
FineStructure fine_mw_structure(std::uint64_t p, const GrowthSummary& gs);

struct PMStructure {
  std::vector<std::uint64_t> r_plus;
  std::vector<std::uint64_t> r_minus;
  CharIdeal char_plus;
  CharIdeal char_minus;
  CharIdeal gcd;
};

/// r_0^+- = e_0; for n odd r^+ = e_n - theta_n and r^- = e_n, swapped for n
/// even > 0. char^+- = prod Phi_n^(r_n^+-). Throws Precondition unless the
/// reduction is supersingular.
PMStructure pm_mw_structure(std::uint64_t p, const GrowthSummary& gs, Reduction reduction);

struct Summand {
  IndexTuple alpha;
  unsigned level = 0;
  std::uint64_t multiplicity = 0;
  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Multiset of (W_alpha tensor Lambda/Phi_k)^m, ordered by (level, alpha).
struct EquivariantDecomposition {
  std::vector<Summand> summands;

  /// sum of multiplicity * dim W_alpha over summands at level k.
  std::uint64_t contracted(const FiniteAbelianGroup& g, unsigned k) const;
};

EquivariantDecomposition equivariant_fine(const FiniteAbelianGroup& g, const EAlphaTable& ea);

/// t_k^+ = 1 for k odd, else 0; t_k^- = 1 for k even and positive, else 0.
unsigned t_sign(Sign sign, unsigned k);

EquivariantDecomposition equivariant_pm(const FiniteAbelianGroup& g, const EAlphaTable& ea, Sign sign);

/// prod over e_n > 0 of Phi_n^(e_n - 1).
CharIdeal greenberg_rhs(std::uint64_t p, const std::vector<std::uint64_t>& e);

/// x^(e_0) prod over n > 0, e_n > 0 of Phi_n^(e_n - 1).
CharIdeal kp_rhs(std::uint64_t p, const std::vector<std::uint64_t>& e);

/// x^t prod over n >= 1, e_n > 1 of Phi_n^(e_n - 1); throws Precondition for t < e_0.
CharIdeal selmer_gcd(std::uint64_t p, const std::vector<std::uint64_t>& e, std::uint64_t t);

struct ConstraintVerdict {
  std::string constraint;  // short machine name
  bool pass = true;
  std::string detail;
  std::string theorem;  // result the check enforces, named in words
};

struct ValidationReport {
  std::vector<ConstraintVerdict> verdicts;
  bool accepted = true;
  std::vector<std::pair<unsigned, std::uint64_t>> sha_cyclo;  // (a_j, f_j - 1)
  std::vector<GenericFactor> sha_generic;
  bool cyclic = true;
  /// Levels named by the shape that lie beyond the supplied growth data.
  std::vector<unsigned> unchecked_levels;
};

/// Distinct a_j; parity of a_j under the signed theories; derived Sha shape
/// and cyclicity. With a growth summary, the number of cyclotomic summands
/// at each level is compared to the Mordell-Weil exponent there (e_n in the
/// ordinary case, r_n^+- in the signed cases).
ValidationReport validate_selmer_shape(const SelmerShape& s, const std::optional<GrowthSummary>& gs);

}  // namespace iwasawa
