#include "iwasawa/verify.hpp"

#include "iwasawa/arith.hpp"
#include "iwasawa/cyclotomic.hpp"
#include "iwasawa/group_oracle.hpp"
#include "iwasawa/oracles.hpp"
#include "iwasawa/rank_data.hpp"
#include "iwasawa/structure.hpp"
#include "iwasawa/sweep.hpp"

namespace iwasawa {

namespace {

void record(OracleCheck& c, bool ok, const std::string& what) {
  ++c.cases;
  if (ok) return;
  if (c.failures++ == 0) c.first_failure = what;
}

OracleCheck cyclotomic_check() {
  OracleCheck c;
  c.name = "cyclotomic-factorization";
  for (unsigned long p : {3UL, 5UL, 7UL}) {
    for (unsigned n = 0; n <= 3; ++n) {
      const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
      record(c, oracles::phi_product_schoolbook(p, n) == omega_poly(p, n), tag);
      if (n > 0) {
        const IntPoly phi = phi_poly(p, n);
        record(c, phi == divide_exact(omega_poly(p, n), omega_poly(p, n - 1)), tag + " quotient");
        record(c, phi.is_distinguished(p) && phi.coeff(0) == p, tag + " distinguished");
      }
    }
  }
  return c;
}

OracleCheck bezout_check() {
  OracleCheck c;
  c.name = "bezout-certificates";
  for (unsigned long p : {3UL, 5UL}) {
    for (unsigned n = 1; n <= 3; ++n) {
      record(c, check_bezout(p, n, bezout_p_power(p, n)), "p=" + std::to_string(p) + " n=" + std::to_string(n));
    }
  }
  return c;
}

OracleCheck fixed_space_check(std::uint64_t max_order) {
  OracleCheck c;
  c.name = "fixed-space-lemma";
  for (const auto& r : fixed_space_sweep(max_order, Execution::Parallel)) {
    record(c, r.formula == r.oracle,
           "|G|=" + std::to_string(r.order) + " beta=(" + r.beta.key() + ") alpha=(" + r.alpha.key() + ")");
  }
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    const FiniteAbelianGroup g = cyclic_group_of_order(n);
    for (const auto& alpha : enumerate_index_tuples(g)) {
      std::uint64_t sum = 0;
      for (const auto& beta : enumerate_index_tuples(g)) {
        if (tuple_leq(beta, alpha)) sum += irrep_dim(g, beta);
      }
      record(c, sum == quotient_order(g, alpha), "|G|=" + std::to_string(n) + " sum below (" + alpha.key() + ")");
    }
  }
  return c;
}

OracleCheck decomposition_check(const OracleSuiteOptions& opt) {
  OracleCheck c;
  c.name = "regular-decomposition";
  oracles::Rng rng(opt.seed);
  for (unsigned i = 0; i < opt.random_cases; ++i) {
    const FiniteAbelianGroup g = oracles::random_group(rng, 64, RepeatedPrimes::Reject);
    const DecompositionReport rep = verify_regular_decomposition(g);
    record(c, rep.dimension_ok && rep.all_irreducible, g.to_string());
  }
  const auto repeated = FiniteAbelianGroup::make({{3, 1}, {3, 1}}, RepeatedPrimes::Allow);
  const DecompositionReport rep = verify_regular_decomposition(repeated);
  record(c, rep.dimension_ok && !rep.all_irreducible, repeated.to_string() + " should be reducible");
  return c;
}

OracleCheck star_check_table(const OracleSuiteOptions& opt) {
  OracleCheck c;
  c.name = "star-classification";
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 3; q <= opt.star_max_p; q += 2) {
    if (arith::is_prime(q)) primes.push_back(q);
  }
  const auto fast = star_table(opt.star_max_m, primes, Execution::Parallel);
  const auto slow = oracles::brute_star_table(opt.star_max_m, primes);
  for (std::size_t i = 0; i < fast.size(); ++i) {
    record(c, fast[i] == slow[i],
           "m=" + std::to_string(i / primes.size() + 1) + " p=" + std::to_string(primes[i % primes.size()]));
  }
  return c;
}

OracleCheck round_trip_check(const OracleSuiteOptions& opt) {
  OracleCheck c;
  c.name = "rank-round-trip";
  oracles::Rng rng(opt.seed + 1);
  for (unsigned i = 0; i < opt.random_cases; ++i) {
    const FiniteAbelianGroup g = oracles::random_small_lattice_group(rng, 8, 200);
    const std::uint64_t p = oracles::random_odd_prime(rng, 13);
    const EAlphaTable ea = oracles::random_e_alpha(rng, g, 3, 3);
    const RankTable t = synthesize_rank_table(g, p, ea);
    record(c, solve_e_alpha(g, p, t) == ea, g.to_string() + " p=" + std::to_string(p));
  }
  return c;
}

OracleCheck theorem_check(const OracleSuiteOptions& opt) {
  OracleCheck c;
  c.name = "theorem-consistency";
  oracles::Rng rng(opt.seed + 2);
  for (unsigned i = 0; i < opt.random_cases; ++i) {
    const FiniteAbelianGroup g = oracles::random_small_lattice_group(rng, 8, 200);
    const std::uint64_t p = oracles::random_odd_prime(rng, 13);
    const EAlphaTable ea = oracles::random_e_alpha(rng, g, 3, 3);
    const GrowthSummary gs = growth_summary(g, ea);
    const PMStructure pm = pm_mw_structure(p, gs, Reduction::Supersingular);
    const FineStructure fine = fine_mw_structure(p, gs);
    const std::string tag = g.to_string() + " p=" + std::to_string(p);
    bool ok = pm.r_plus[0] == gs.e[0] && pm.r_minus[0] == gs.e[0];
    for (unsigned n = 1; n < gs.e.size(); ++n) ok = ok && pm.r_plus[n] + pm.r_minus[n] == 2 * gs.e[n] - gs.theta[n];
    record(c, ok, tag + " r+ + r-");
    record(c, char_gcd(pm.char_plus, pm.char_minus) == pm.gcd, tag + " gcd");
    const auto eq = equivariant_fine(g, ea);
    bool contracted = true;
    for (unsigned k = 0; k <= ea.max_level; ++k) contracted = contracted && eq.contracted(g, k) == fine.exponents[k];
    record(c, contracted, tag + " contraction");
  }
  return c;
}

}  // namespace

std::vector<OracleCheck> run_oracle_suite(const OracleSuiteOptions& opt) {
  return {cyclotomic_check(),       bezout_check(),          fixed_space_check(opt.max_order),
          decomposition_check(opt), star_check_table(opt),   round_trip_check(opt),
          theorem_check(opt)};
}

}  // namespace iwasawa
