#include <doctest.h>

#include <random>
#include <set>

#include "iwasawa/error.hpp"
#include "iwasawa/group_oracle.hpp"
#include "iwasawa/group_reps.hpp"
#include "iwasawa/linalg.hpp"
#include "iwasawa/oracles.hpp"
#include "iwasawa/sweep.hpp"

using namespace iwasawa;

namespace {

FiniteAbelianGroup G(std::vector<PrimePowerFactor> f, RepeatedPrimes policy = RepeatedPrimes::Reject) {
  return FiniteAbelianGroup::make(std::move(f), policy);
}

IndexTuple T(std::vector<unsigned> e) { return IndexTuple{std::move(e)}; }

std::vector<IndexTuple> tuples(std::initializer_list<std::vector<unsigned>> list) {
  std::vector<IndexTuple> out;
  for (const auto& e : list) out.push_back(T(e));
  return out;
}

}  // namespace

TEST_CASE("group construction and invariants") {
  const auto g = G({{2, 2}, {3, 1}});
  CHECK(g.order() == 12);
  CHECK(g.exponent() == 12);
  CHECK(g.distinct_support());
  CHECK(FiniteAbelianGroup().order() == 1);
  CHECK_THROWS_AS(G({{4, 1}}), Error);
  CHECK_THROWS_AS(G({{3, 0}}), Error);
  try {
    G({{3, 1}, {3, 1}});
    FAIL("repeated primes accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RepeatedPrimes);
  }
  const auto r = G({{3, 1}, {3, 2}}, RepeatedPrimes::Allow);
  CHECK_FALSE(r.distinct_support());
  CHECK(r.exponent() == 9);
}

TEST_CASE("enumerate_index_tuples") {
  CHECK(enumerate_index_tuples(G({{2, 1}})) == tuples({{0}, {1}}));
  CHECK(enumerate_index_tuples(G({{2, 2}})) == tuples({{0}, {1}, {2}}));
  CHECK(enumerate_index_tuples(G({{2, 1}, {3, 1}})) == tuples({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(enumerate_index_tuples(FiniteAbelianGroup()) == tuples({{}}));
}

TEST_CASE("tuple_leq") {
  CHECK(tuple_leq(T({0, 1}), T({1, 1})));
  CHECK_FALSE(tuple_leq(T({2}), T({1})));
  CHECK_FALSE(tuple_leq(T({1, 0}), T({0, 1})));
  CHECK_FALSE(tuple_leq(T({0, 1}), T({1, 0})));
  CHECK_THROWS_AS(tuple_leq(T({1}), T({1, 0})), Error);
}

TEST_CASE("irrep_dim") {
  CHECK(irrep_dim(G({{3, 2}}), T({0})) == 1);
  CHECK(irrep_dim(G({{3, 2}}), T({2})) == 6);
  CHECK(irrep_dim(G({{2, 2}, {3, 1}}), T({2, 1})) == 4);
  CHECK_THROWS_AS(irrep_dim(G({{3, 2}}), T({3})), Error);
  CHECK_THROWS_AS(irrep_dim(G({{3, 2}}), T({1, 0})), Error);
}

TEST_CASE("fixed_subspace_dim") {
  CHECK(fixed_subspace_dim(G({{2, 2}}), T({0}), T({0})) == 1);
  CHECK(fixed_subspace_dim(G({{2, 2}}), T({2}), T({1})) == 0);
  CHECK(fixed_subspace_dim(G({{2, 1}, {3, 1}}), T({1, 1}), T({1, 1})) == 2);
}

TEST_CASE("oracle_fixed_subspace_dim examples") {
  const auto g2 = G({{2, 1}});
  const GroupAlgebraModel m2(g2);
  for (const auto& b : enumerate_index_tuples(g2)) {
    for (const auto& a : enumerate_index_tuples(g2)) {
      CHECK(oracle_fixed_subspace_dim(m2, b, a) == fixed_subspace_dim(g2, b, a));
    }
  }
  const GroupAlgebraModel m6(G({{2, 1}, {3, 1}}));
  CHECK(oracle_fixed_subspace_dim(m6, T({1, 1}), T({1, 1})) == 2);
  const GroupAlgebraModel m5(G({{5, 1}}));
  CHECK(oracle_fixed_subspace_dim(m5, T({1}), T({0})) == 0);
}

TEST_CASE("oracle refuses repeated primes unless allowed") {
  const GroupAlgebraModel m(G({{3, 1}, {3, 1}}, RepeatedPrimes::Allow));
  CHECK_THROWS_AS(oracle_fixed_subspace_dim(m, T({1, 1}), T({1, 1})), Error);
  CHECK(oracle_fixed_subspace_dim(m, T({1, 1}), T({1, 1}), RepeatedPrimes::Allow) == 4);
}

TEST_CASE("verify_regular_decomposition") {
  const auto r6 = verify_regular_decomposition(G({{2, 1}, {3, 1}}));
  CHECK(r6.dimension_sum == 6);
  CHECK(r6.dimension_ok);
  CHECK(r6.components.size() == 4);
  CHECK(r6.all_irreducible);

  const auto r1 = verify_regular_decomposition(FiniteAbelianGroup());
  CHECK(r1.dimension_sum == 1);
  CHECK(r1.all_irreducible);

  const auto r9 = verify_regular_decomposition(G({{3, 1}, {3, 1}}, RepeatedPrimes::Allow));
  CHECK(r9.dimension_ok);
  CHECK_FALSE(r9.all_irreducible);
  for (const auto& c : r9.components) {
    const bool top = c.tuple == T({1, 1});
    CHECK(c.irreducible == !top);
    if (top) {
      CHECK(c.basis_dim == 4);
      CHECK(c.splitting_element.has_value());
    }
  }
}

TEST_CASE("tensor isotypic basis spans the same space as the stacked elimination") {
  for (std::uint64_t n : {6ULL, 12ULL, 20ULL, 30ULL}) {
    const auto g = cyclic_group_of_order(n);
    const GroupAlgebraModel m(g);
    for (const auto& beta : enumerate_index_tuples(g)) {
      const auto a = m.isotypic_basis(beta);
      const auto b = m.isotypic_basis_stacked(beta);
      CHECK(a.size() == b.size());
      std::vector<linalg::Vector> both = a;
      both.insert(both.end(), b.begin(), b.end());
      CHECK(linalg::rank(linalg::IntMatrix::from_columns(both, m.dimension())) == a.size());
    }
  }
}

TEST_CASE("property: formula and oracle agree for all orders <= 60") {
  for (const auto& r : fixed_space_sweep(60, Execution::Serial)) {
    INFO("|G| = " << r.order << " beta = " << r.beta.key() << " alpha = " << r.alpha.key());
    CHECK(r.formula == r.oracle);
  }
}

TEST_CASE("property: regular dimension sum and divisor sums on random groups") {
  oracles::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto g = oracles::random_group(rng, 5000, RepeatedPrimes::Allow);
    CHECK(regular_dimension_sum(g) == g.order());
    if (!g.distinct_support()) continue;
    for (const auto& alpha : enumerate_index_tuples(g)) {
      std::uint64_t s = 0;
      for (const auto& beta : enumerate_index_tuples(g)) {
        if (tuple_leq(beta, alpha)) s += irrep_dim(g, beta);
      }
      CHECK(s == quotient_order(g, alpha));
    }
  }
}

TEST_CASE("property: tuple_leq is a partial order; enumeration is duplicate-free") {
  oracles::Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracles::random_group(rng, 2000, RepeatedPrimes::Allow);
    const auto ts = enumerate_index_tuples(g);
    std::uint64_t expected = 1;
    for (const auto& f : g.factors()) expected *= f.n + 1;
    CHECK(ts.size() == expected);
    CHECK(std::set<IndexTuple>(ts.begin(), ts.end()).size() == ts.size());
    for (int k = 0; k < 50; ++k) {
      const auto& a = ts[rng() % ts.size()];
      const auto& b = ts[rng() % ts.size()];
      const auto& c = ts[rng() % ts.size()];
      CHECK(tuple_leq(a, a));
      if (tuple_leq(a, b) && tuple_leq(b, a)) CHECK(a == b);
      if (tuple_leq(a, b) && tuple_leq(b, c)) CHECK(tuple_leq(a, c));
    }
  }
}

TEST_CASE("index tuple keys round-trip") {
  CHECK(T({1, 0}).key() == "1,0");
  CHECK(IndexTuple::parse_key("1,0") == T({1, 0}));
  CHECK(IndexTuple::parse_key("") == T({}));
  CHECK_THROWS_AS(IndexTuple::parse_key("1,,0"), Error);
}
