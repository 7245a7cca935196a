#pragma once

#include <cstdint>
#include <vector>

#include "iwasawa/group_reps.hpp"

// Batch kernels over many groups or moduli. Each has an OpenMP path and a
// plain serial path; both return identical, deterministically ordered output.
namespace iwasawa {

enum class Execution { Serial, Parallel };

/// Threads an OpenMP region would use (1 in serial builds).
unsigned sweep_threads();

/// Row-major verdicts of the (star) check: entry [(m - 1) * primes.size() + j]
/// is 1 iff modulus m passes for primes[j].
std::vector<std::uint8_t> star_table(std::uint64_t max_m, const std::vector<std::uint64_t>& primes,
                                     Execution exec);

struct FixedSpaceRecord {
  std::uint64_t order = 0;
  IndexTuple beta;
  IndexTuple alpha;
  std::uint64_t formula = 0;  // fixed_subspace_dim
  std::uint64_t oracle = 0;   // oracle_fixed_dim_on
  friend bool operator==(const FixedSpaceRecord&, const FixedSpaceRecord&) = default;
};

/// Every group with pairwise distinct primes and order <= max_order (one per
/// order, factors by ascending prime), every (beta, alpha) pair.
std::vector<FixedSpaceRecord> fixed_space_sweep(std::uint64_t max_order, Execution exec);

/// The group of order n with one cyclic factor per prime, ascending.
FiniteAbelianGroup cyclic_group_of_order(std::uint64_t n);

}  // namespace iwasawa
