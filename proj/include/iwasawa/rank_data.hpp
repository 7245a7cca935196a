#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/group_reps.hpp"
#include "iwasawa/hypotheses.hpp"
#include "iwasawa/selmer_shape.hpp"

namespace iwasawa {

/// ranks[alpha][n] = rank of E over the fixed field of G_alpha in K_(n),
/// for n = 0..max_level.
struct RankTable {
  unsigned max_level = 0;
  std::map<IndexTuple, std::vector<std::uint64_t>> ranks;
  friend bool operator==(const RankTable&, const RankTable&) = default;
};

/// values[alpha][k] = e_{alpha,k}.
struct EAlphaTable {
  unsigned max_level = 0;
  std::map<IndexTuple, std::vector<std::uint64_t>> values;

  std::uint64_t at(const IndexTuple& alpha, unsigned k) const;
  friend bool operator==(const EAlphaTable&, const EAlphaTable&) = default;
};

struct GrowthSummary {
  std::vector<std::uint64_t> e;
  std::vector<std::uint64_t> theta;
  std::vector<std::uint64_t> s;
  friend bool operator==(const GrowthSummary&, const GrowthSummary&) = default;
};

/// Row presence, row lengths, monotonicity in n and along the partial order.
/// Errors: MissingTupleRow, InvalidTuple, LengthMismatch, NonMonotoneRanks.
void validate_rank_table(const FiniteAbelianGroup& g, const RankTable& t);

/// Inverts the rank formula level by level, tuples in lexicographic order.
/// Throws InconsistentRanks naming the first (alpha, n) whose value is not a
/// nonnegative integer.
EAlphaTable solve_e_alpha(const FiniteAbelianGroup& g, std::uint64_t p, const RankTable& t);

/// e_n = sum e_{alpha,n} dim W_alpha, theta_n = sum over n-positive alpha of
/// dim W_alpha, s_n = e_n - theta_n.
GrowthSummary growth_summary(const FiniteAbelianGroup& g, const EAlphaTable& ea);

/// rk_alpha[n] = sum over beta <= alpha, k <= n of e_{beta,k} dim W_beta phi(p^k).
RankTable synthesize_rank_table(const FiniteAbelianGroup& g, std::uint64_t p, const EAlphaTable& ea);

/// (rk[n] - rk[n-1]) / phi(p^n) for a single row; throws InconsistentRanks
/// when a jump is not divisible.
std::vector<std::uint64_t> normalized_jumps(const std::vector<std::uint64_t>& row, std::uint64_t p);

struct CurveInput {
  std::string label;
  std::map<std::uint64_t, long> ap;
  std::optional<std::uint64_t> rank;
};

struct ProblemInstance {
  std::uint64_t p = 0;
  FieldDescriptor field;
  std::optional<CurveInput> curve;
  std::optional<RankTable> ranks;
  bool assume_fine_sha_finite = false;
  bool assume_pm_sha_finite = false;
  std::optional<SelmerShape> selmer_shape;
  std::optional<std::uint64_t> selmer_t;
};

struct ParseOptions {
  RepeatedPrimes repeated_primes = RepeatedPrimes::Reject;
  /// Drop levels above this one after validation.
  std::optional<unsigned> max_level;
};

/// Parses and validates an instance document. Errors carry a location:
/// Schema, MissingTupleRow, NonMonotoneRanks, HypothesisField, plus the
/// group and prime errors of the underlying modules.
ProblemInstance parse_input(const std::string& document, const ParseOptions& options = {});

}  // namespace iwasawa
