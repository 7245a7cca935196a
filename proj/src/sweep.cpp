#include "iwasawa/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "iwasawa/arith.hpp"
#include "iwasawa/group_oracle.hpp"
#include "iwasawa/hypotheses.hpp"

namespace iwasawa {

namespace {

std::vector<FixedSpaceRecord> records_for_order(std::uint64_t n) {
  const FiniteAbelianGroup g = cyclic_group_of_order(n);
  const GroupAlgebraModel model(g);
  const std::vector<IndexTuple> tuples = enumerate_index_tuples(g);
  std::vector<FixedSpaceRecord> out;
  out.reserve(tuples.size() * tuples.size());
  for (const auto& beta : tuples) {
    const auto basis = model.isotypic_basis(beta);
    for (const auto& alpha : tuples) {
      out.push_back({n, beta, alpha, fixed_subspace_dim(g, beta, alpha), oracle_fixed_dim_on(model, basis, alpha)});
    }
  }
  return out;
}

}  // namespace

unsigned sweep_threads() {
#ifdef _OPENMP
  return static_cast<unsigned>(omp_get_max_threads());
#else
  return 1;
#endif
}

FiniteAbelianGroup cyclic_group_of_order(std::uint64_t n) {
  std::vector<PrimePowerFactor> factors;
  for (auto [q, e] : arith::factorize(n)) factors.push_back({q, e});
  return FiniteAbelianGroup::make(std::move(factors));
}

std::vector<std::uint8_t> star_table(std::uint64_t max_m, const std::vector<std::uint64_t>& primes,
                                     Execution exec) {
  const std::size_t width = primes.size();
  std::vector<std::uint8_t> table(max_m * width, 0);
  const auto rows = static_cast<long long>(max_m);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < width; ++j) {
        table[i * width + j] = star_check_modulus(static_cast<std::uint64_t>(i + 1), primes[j]).pass;
      }
    }
  } else {
    for (long long i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < width; ++j) {
        table[i * width + j] = star_check_modulus(static_cast<std::uint64_t>(i + 1), primes[j]).pass;
      }
    }
  }
  return table;
}

std::vector<FixedSpaceRecord> fixed_space_sweep(std::uint64_t max_order, Execution exec) {
  std::vector<std::vector<FixedSpaceRecord>> per_order(max_order);
  const auto count = static_cast<long long>(max_order);
  if (exec == Execution::Parallel) {
    // Large orders dominate; hand them out first.
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = count - 1; i >= 0; --i) per_order[i] = records_for_order(static_cast<std::uint64_t>(i + 1));
  } else {
    for (long long i = 0; i < count; ++i) per_order[i] = records_for_order(static_cast<std::uint64_t>(i + 1));
  }
  std::vector<FixedSpaceRecord> out;
  for (auto& v : per_order) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace iwasawa
