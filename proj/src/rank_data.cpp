#include "iwasawa/rank_data.hpp"

#include "iwasawa/arith.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p == 2) throw Error(ErrorCode::EvenPrime, "p = 2 is not supported; p must be an odd prime");
  if (!arith::is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

std::string where(const IndexTuple& alpha, unsigned n) {
  return "(alpha = (" + alpha.key() + "), n = " + std::to_string(n) + ")";
}

template <typename Table>
const std::vector<std::uint64_t>& row_of(const Table& rows, const IndexTuple& alpha, unsigned max_level) {
  auto it = rows.find(alpha);
  if (it == rows.end()) {
    throw Error(ErrorCode::MissingTupleRow, "missing tuple row for alpha = (" + alpha.key() + ")");
  }
  if (it->second.size() != max_level + 1) {
    throw Error(ErrorCode::LengthMismatch, "row for alpha = (" + alpha.key() + ") has " +
                                               std::to_string(it->second.size()) +
                                               " entries, expected " + std::to_string(max_level + 1));
  }
  return it->second;
}

template <typename Table>
void check_rows(const FiniteAbelianGroup& g, const Table& rows, unsigned max_level) {
  for (const auto& [alpha, row] : rows) validate_tuple(g, alpha);
  for (const auto& alpha : enumerate_index_tuples(g)) (void)row_of(rows, alpha, max_level);
}

}  // namespace

std::uint64_t EAlphaTable::at(const IndexTuple& alpha, unsigned k) const {
  auto it = values.find(alpha);
  if (it == values.end() || k >= it->second.size()) return 0;
  return it->second[k];
}

void validate_rank_table(const FiniteAbelianGroup& g, const RankTable& t) {
  check_rows(g, t.ranks, t.max_level);
  for (const auto& [alpha, row] : t.ranks) {
    for (unsigned n = 1; n <= t.max_level; ++n) {
      if (row[n] < row[n - 1]) {
        throw Error(ErrorCode::NonMonotoneRanks, "non-monotone ranks: row (" + alpha.key() +
                                                     ") decreases from level " +
                                                     std::to_string(n - 1) + " to " + std::to_string(n));
      }
    }
  }
  for (const auto& [beta, low] : t.ranks) {
    for (const auto& [alpha, high] : t.ranks) {
      if (beta == alpha || !tuple_leq(beta, alpha)) continue;
      for (unsigned n = 0; n <= t.max_level; ++n) {
        if (low[n] > high[n]) {
          throw Error(ErrorCode::NonMonotoneRanks,
                      "non-monotone ranks: (" + beta.key() + ") <= (" + alpha.key() +
                          ") but its rank exceeds at level " + std::to_string(n));
        }
      }
    }
  }
}

std::vector<std::uint64_t> normalized_jumps(const std::vector<std::uint64_t>& row, std::uint64_t p) {
  std::vector<std::uint64_t> out(row.size());
  for (unsigned n = 0; n < row.size(); ++n) {
    const std::uint64_t prev = n == 0 ? 0 : row[n - 1];
    const std::uint64_t phi = arith::prime_power_totient(p, n);
    if (row[n] < prev || (row[n] - prev) % phi != 0) {
      throw Error(ErrorCode::InconsistentRanks, "rank jump at n = " + std::to_string(n) +
                                                    " is not a nonnegative multiple of phi(p^n) = " +
                                                    std::to_string(phi));
    }
    out[n] = (row[n] - prev) / phi;
  }
  return out;
}

EAlphaTable solve_e_alpha(const FiniteAbelianGroup& g, std::uint64_t p, const RankTable& t) {
  require_odd_prime(p);
  check_rows(g, t.ranks, t.max_level);
  const std::vector<IndexTuple> tuples = enumerate_index_tuples(g);

  EAlphaTable ea;
  ea.max_level = t.max_level;
  for (const auto& alpha : tuples) ea.values[alpha].assign(t.max_level + 1, 0);

  for (unsigned n = 0; n <= t.max_level; ++n) {
    const auto phi = static_cast<long long>(arith::prime_power_totient(p, n));
    for (const auto& alpha : tuples) {
      const auto& row = t.ranks.at(alpha);
      const long long jump =
          static_cast<long long>(row[n]) - (n == 0 ? 0LL : static_cast<long long>(row[n - 1]));
      if (jump % phi != 0) {
        throw Error(ErrorCode::InconsistentRanks,
                    "inconsistent ranks at " + where(alpha, n) + ": jump " + std::to_string(jump) +
                        " is not divisible by phi(p^n) = " + std::to_string(phi));
      }
      long long rest = jump / phi;
      for (const auto& beta : tuples) {
        if (beta == alpha || !tuple_leq(beta, alpha)) continue;
        rest -= static_cast<long long>(ea.values[beta][n] * irrep_dim(g, beta));
      }
      const auto dim = static_cast<long long>(irrep_dim(g, alpha));
      if (rest < 0 || rest % dim != 0) {
        throw Error(ErrorCode::InconsistentRanks,
                    "inconsistent ranks at " + where(alpha, n) + ": residual " +
                        std::to_string(rest) + " is not a nonnegative multiple of dim W_alpha = " +
                        std::to_string(dim));
      }
      ea.values[alpha][n] = static_cast<std::uint64_t>(rest / dim);
    }
  }
  return ea;
}

GrowthSummary growth_summary(const FiniteAbelianGroup& g, const EAlphaTable& ea) {
  check_rows(g, ea.values, ea.max_level);
  GrowthSummary gs;
  gs.e.assign(ea.max_level + 1, 0);
  gs.theta.assign(ea.max_level + 1, 0);
  gs.s.assign(ea.max_level + 1, 0);
  for (const auto& [alpha, row] : ea.values) {
    const std::uint64_t dim = irrep_dim(g, alpha);
    for (unsigned n = 0; n <= ea.max_level; ++n) {
      if (row[n] == 0) continue;
      gs.e[n] += row[n] * dim;
      gs.theta[n] += dim;
    }
  }
  for (unsigned n = 0; n <= ea.max_level; ++n) {
    if (gs.e[n] < gs.theta[n]) {
      throw Error(ErrorCode::NegativeCorank, "s_" + std::to_string(n) + " = e_n - theta_n is negative");
    }
    gs.s[n] = gs.e[n] - gs.theta[n];
  }
  return gs;
}

RankTable synthesize_rank_table(const FiniteAbelianGroup& g, std::uint64_t p, const EAlphaTable& ea) {
  require_odd_prime(p);
  check_rows(g, ea.values, ea.max_level);
  RankTable t;
  t.max_level = ea.max_level;
  const std::vector<IndexTuple> tuples = enumerate_index_tuples(g);
  for (const auto& alpha : tuples) {
    std::vector<std::uint64_t> row(ea.max_level + 1, 0);
    std::uint64_t acc = 0;
    for (unsigned n = 0; n <= ea.max_level; ++n) {
      const std::uint64_t phi = arith::prime_power_totient(p, n);
      for (const auto& beta : tuples) {
        if (tuple_leq(beta, alpha)) acc += ea.values.at(beta)[n] * irrep_dim(g, beta) * phi;
      }
      row[n] = acc;
    }
    t.ranks[alpha] = std::move(row);
  }
  return t;
}

}  // namespace iwasawa
