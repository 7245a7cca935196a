#include <doctest.h>

#include "iwasawa/arith.hpp"
#include "iwasawa/error.hpp"
#include "iwasawa/hypotheses.hpp"
#include "iwasawa/oracles.hpp"

using namespace iwasawa;

namespace {

FiniteAbelianGroup G(std::vector<PrimePowerFactor> f) { return FiniteAbelianGroup::make(std::move(f)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("group_exponent") {
  CHECK(group_exponent(G({{2, 2}, {3, 1}})) == 12);
  CHECK(group_exponent(G({{3, 2}})) == 9);
  CHECK(group_exponent(FiniteAbelianGroup()) == 1);
}

TEST_CASE("star_check examples") {
  const auto a = star_check(G({{5, 1}}), 3);
  CHECK(a.pass);
  CHECK(a.witness.order == 4);
  CHECK(a.witness.totient == 4);
  CHECK(oracles::brute_order(3, 5) == 4);

  const auto b = star_check(G({{2, 3}}), 7);
  CHECK_FALSE(b.pass);
  CHECK(b.witness.order == 2);
  CHECK(b.witness.totient == 4);
  CHECK(oracles::brute_order(7, 8) == 2);

  const auto c = star_check(G({{3, 1}}), 3);
  CHECK(c.pass);
  CHECK(c.witness.m_prime == 1);
  CHECK(c.witness.r == 1);

  CHECK(code_of([] { star_check(G({{3, 1}}), 2); }) == ErrorCode::EvenPrime);
}

TEST_CASE("property: star classification matches brute force for m <= 2000, odd p <= 50") {
  for (std::uint64_t p = 3; p <= 50; p += 2) {
    if (!arith::is_prime(p)) continue;
    for (std::uint64_t m = 1; m <= 2000; ++m) {
      INFO("m = " << m << " p = " << p);
      CHECK(star_check_modulus(m, p).pass == oracles::brute_star_pass(m, p));
    }
  }
}

TEST_CASE("field_hypotheses") {
  auto verdicts = [](std::uint64_t f, std::uint64_t p) {
    return field_hypotheses(FieldDescriptor::make(G({{2, 1}}), f), p).verdicts;
  };
  auto v20 = verdicts(20, 3);
  REQUIRE(v20.size() == 2);
  CHECK(v20[0].name == "p-unramified");
  CHECK(v20[0].pass);
  CHECK(v20[1].pass);
  CHECK(v20[0].witness == "v_3(20) = 0");
  auto v15 = verdicts(15, 3);
  CHECK_FALSE(v15[0].pass);
  CHECK(v15[1].pass);
  auto v9 = verdicts(9, 3);
  CHECK_FALSE(v9[1].pass);
  CHECK(v9[1].witness == "v_3(9) = 2");
}

TEST_CASE("field descriptor requires exp(G) | phi(f)") {
  CHECK_NOTHROW(FieldDescriptor::make(G({{2, 1}}), 20));
  CHECK(code_of([] { FieldDescriptor::make(G({{5, 1}}), 20); }) == ErrorCode::HypothesisField);
}

TEST_CASE("reduction_type") {
  CHECK(reduction_type(0, 5) == Reduction::Supersingular);
  CHECK(reduction_type(1, 5) == Reduction::Ordinary);
  CHECK(reduction_type(3, 3) == Reduction::Unsupported);
  CHECK(code_of([] { reduction_type(5, 5); }) == ErrorCode::HasseBound);
  CHECK(code_of([] { reduction_type(0, 2); }) == ErrorCode::EvenPrime);
}

TEST_CASE("property: reduction_type partitions the Hasse range") {
  for (std::uint64_t p = 3; p < 200; p += 2) {
    if (!arith::is_prime(p)) continue;
    for (long a = -40; a <= 40; ++a) {
      if (!within_hasse(a, p)) {
        CHECK_THROWS_AS(reduction_type(a, p), Error);
        continue;
      }
      const Reduction r = reduction_type(a, p);
      const bool ordinary = a % static_cast<long>(p) != 0;
      CHECK((r == Reduction::Ordinary) == ordinary);
      CHECK((r == Reduction::Supersingular) == (a == 0));
      CHECK((r == Reduction::Unsupported) == (!ordinary && a != 0));
    }
  }
}

TEST_CASE("within_hasse is exact at the boundary") {
  CHECK(within_hasse(4, 4));
  CHECK(within_hasse(2, 2));
  CHECK_FALSE(within_hasse(3, 2));
  CHECK(within_hasse(-6, 11));  // 36 <= 44
  CHECK_FALSE(within_hasse(7, 11));
}

TEST_CASE("check_hasse skips bad primes only when the conductor is known") {
  CurveData c;
  c.label = "x";
  c.ap = {{3, 4}};
  CHECK_THROWS_AS(check_hasse(c), Error);
  c.conductor = 27;
  CHECK_NOTHROW(check_hasse(c));
}

TEST_CASE("property: exponent divides order; equality iff one factor per prime") {
  oracles::Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const auto g = oracles::random_group(rng, 100000, RepeatedPrimes::Allow);
    CHECK(g.order() % group_exponent(g) == 0);
    CHECK((group_exponent(g) == g.order()) == g.distinct_support());
  }
}
