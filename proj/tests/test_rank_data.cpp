#include <doctest.h>

#include <fstream>
#include <sstream>

#include "iwasawa/error.hpp"
#include "iwasawa/oracles.hpp"
#include "iwasawa/rank_data.hpp"

using namespace iwasawa;

namespace {

FiniteAbelianGroup G(std::vector<PrimePowerFactor> f) { return FiniteAbelianGroup::make(std::move(f)); }
IndexTuple T(std::vector<unsigned> e) { return IndexTuple{std::move(e)}; }

RankTable table(unsigned max_level, std::map<IndexTuple, std::vector<std::uint64_t>> rows) {
  return RankTable{max_level, std::move(rows)};
}

Error error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error thrown");
  return Error(ErrorCode::InvalidArgument, "");
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("solve_e_alpha over Q") {
  const auto ea = solve_e_alpha(FiniteAbelianGroup(), 3, table(2, {{T({}), {1, 3, 3}}}));
  CHECK(ea.values.at(T({})) == std::vector<std::uint64_t>{1, 1, 0});
}

TEST_CASE("solve_e_alpha quadratic example") {
  const auto ea = solve_e_alpha(G({{2, 1}}), 3, table(1, {{T({0}), {0, 0}}, {T({1}), {1, 3}}}));
  CHECK(ea.at(T({0}), 0) == 0);
  CHECK(ea.at(T({1}), 0) == 1);
  CHECK(ea.at(T({0}), 1) == 0);
  CHECK(ea.at(T({1}), 1) == 1);
}

TEST_CASE("solve_e_alpha rejects a non-integral jump and names the spot") {
  const Error e = error_of([] { solve_e_alpha(FiniteAbelianGroup(), 3, table(1, {{T({}), {1, 2}}})); });
  CHECK(e.code() == ErrorCode::InconsistentRanks);
  CHECK(std::string(e.what()).find("n = 1") != std::string::npos);
}

TEST_CASE("solve_e_alpha rejects a negative multiplicity") {
  // Row (1) starts below row (0).
  const Error e = error_of(
      [] { solve_e_alpha(G({{2, 1}}), 3, table(1, {{T({0}), {1, 3}}, {T({1}), {0, 2}}})); });
  CHECK(e.code() == ErrorCode::InconsistentRanks);
}

TEST_CASE("growth_summary") {
  const auto g = G({{2, 1}});
  const auto ea = solve_e_alpha(g, 3, table(1, {{T({0}), {0, 0}}, {T({1}), {1, 3}}}));
  const auto gs = growth_summary(g, ea);
  CHECK(gs.e == std::vector<std::uint64_t>{1, 1});
  CHECK(gs.theta == std::vector<std::uint64_t>{1, 1});
  CHECK(gs.s == std::vector<std::uint64_t>{0, 0});

  EAlphaTable q{2, {{T({}), {1, 1, 0}}}};
  const auto gq = growth_summary(FiniteAbelianGroup(), q);
  CHECK(gq.e == std::vector<std::uint64_t>{1, 1, 0});
  CHECK(gq.theta == std::vector<std::uint64_t>{1, 1, 0});

  EAlphaTable zero{1, {{T({0}), {0, 0}}, {T({1}), {0, 0}}}};
  CHECK(growth_summary(g, zero).e == std::vector<std::uint64_t>{0, 0});
}

TEST_CASE("synthesize_rank_table") {
  EAlphaTable q{1, {{T({}), {1, 1}}}};
  CHECK(synthesize_rank_table(FiniteAbelianGroup(), 3, q).ranks.at(T({})) == std::vector<std::uint64_t>{1, 3});
  EAlphaTable zero{2, {{T({}), {0, 0, 0}}}};
  CHECK(synthesize_rank_table(FiniteAbelianGroup(), 5, zero).ranks.at(T({})) ==
        std::vector<std::uint64_t>{0, 0, 0});
  EAlphaTable quad{1, {{T({0}), {0, 0}}, {T({1}), {1, 1}}}};
  const auto t = synthesize_rank_table(G({{2, 1}}), 3, quad);
  CHECK(t.ranks.at(T({1})) == std::vector<std::uint64_t>{1, 3});
  CHECK(t.ranks.at(T({0})) == std::vector<std::uint64_t>{0, 0});
}

TEST_CASE("property: solve inverts synthesize on random tables") {
  oracles::Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracles::random_small_lattice_group(rng, 8, 1000);
    const auto p = oracles::random_odd_prime(rng, 23);
    const auto ea = oracles::random_e_alpha(rng, g, static_cast<unsigned>(rng() % 5), 3);
    const auto t = synthesize_rank_table(g, p, ea);
    CHECK_NOTHROW(validate_rank_table(g, t));
    CHECK(solve_e_alpha(g, p, t) == ea);
  }
}

TEST_CASE("property: e_n from the top row equals the weighted sum; theta over Q is an indicator") {
  oracles::Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracles::random_small_lattice_group(rng, 8, 1000);
    const auto p = oracles::random_odd_prime(rng, 13);
    const auto ea = oracles::random_e_alpha(rng, g, 3, 3);
    const auto gs = growth_summary(g, ea);
    const auto t = synthesize_rank_table(g, p, ea);
    IndexTuple top;
    for (const auto& f : g.factors()) top.entries.push_back(f.n);
    CHECK(normalized_jumps(t.ranks.at(top), p) == gs.e);

    const auto eq = oracles::random_e_alpha(rng, FiniteAbelianGroup(), 3, 3);
    const auto gq = growth_summary(FiniteAbelianGroup(), eq);
    for (unsigned n = 0; n < gq.e.size(); ++n) CHECK(gq.theta[n] == (gq.e[n] > 0 ? 1u : 0u));
  }
}

TEST_CASE("validate_rank_table") {
  const auto g = G({{2, 1}, {3, 1}});
  const auto full = table(0, {{T({0, 0}), {0}}, {T({0, 1}), {1}}, {T({1, 0}), {0}}, {T({1, 1}), {2}}});
  CHECK_NOTHROW(validate_rank_table(g, full));
  auto missing = full;
  missing.ranks.erase(T({1, 0}));
  CHECK(error_of([&] { validate_rank_table(g, missing); }).code() == ErrorCode::MissingTupleRow);
  auto order = full;
  order.ranks[T({1, 1})] = {0};
  CHECK(error_of([&] { validate_rank_table(g, order); }).code() == ErrorCode::NonMonotoneRanks);
  CHECK(error_of([&] { validate_rank_table(FiniteAbelianGroup(), table(1, {{T({}), {2, 1}}})); }).code() ==
        ErrorCode::NonMonotoneRanks);
}

TEST_CASE("parse_input") {
  const auto inst = parse_input(R"({"p": 3, "group": [[2,1]], "conductor": 20,
                                    "ranks": {"0": [0,0], "1": [1,3]}})");
  CHECK(inst.p == 3);
  CHECK(inst.ranks->max_level == 1);
  CHECK_FALSE(inst.assume_fine_sha_finite);

  CHECK(parse_input(R"({"p": 5, "group": [], "conductor": 1})").field.group.order() == 1);

  const Error missing = error_of([] {
    parse_input(R"({"p": 5, "group": [[2,1],[3,1]], "conductor": 7,
                    "ranks": {"0,0": [0], "0,1": [0], "1,1": [0]}})");
  });
  CHECK(missing.code() == ErrorCode::MissingTupleRow);
  CHECK(std::string(missing.what()).find("missing tuple row") != std::string::npos);

  const Error mono =
      error_of([] { parse_input(R"({"p": 3, "group": [], "conductor": 1, "ranks": {"": [2, 1]}})"); });
  CHECK(mono.code() == ErrorCode::NonMonotoneRanks);
  CHECK(std::string(mono.what()).find("non-monotone ranks") != std::string::npos);

  const Error unknown = error_of([] { parse_input(R"({"p": 3, "group": [], "conductor": 1, "extra": 1})"); });
  CHECK(unknown.code() == ErrorCode::Schema);
  CHECK(std::string(unknown.what()).find("$") != std::string::npos);

  const Error field = error_of([] { parse_input(R"({"p": 3, "group": [[5,1]], "conductor": 7})"); });
  CHECK(field.code() == ErrorCode::HypothesisField);

  const Error width = error_of([] {
    parse_input(R"({"p": 3, "group": [], "conductor": 1, "max_level": 2, "ranks": {"": [1, 3]}})");
  });
  CHECK(width.code() == ErrorCode::Schema);

  CHECK(error_of([] { parse_input(R"({"p": 2, "group": [], "conductor": 1})"); }).code() == ErrorCode::EvenPrime);
  CHECK(error_of([] { parse_input("{not json"); }).code() == ErrorCode::Schema);
}

TEST_CASE("parse_input curve, flags, truncation and repeated primes") {
  const auto inst = parse_input(R"({"p": 5, "group": [], "conductor": 1,
      "curve": {"label": "27.a3", "ap": {"2": 0, "5": 0}, "rank": 0},
      "ranks": {"": [0, 4, 4]}, "assume_fine_sha_finite": true})",
                                ParseOptions{RepeatedPrimes::Reject, 1});
  CHECK(inst.curve->ap.at(5) == 0);
  CHECK(inst.assume_fine_sha_finite);
  CHECK(inst.ranks->max_level == 1);
  CHECK(inst.ranks->ranks.at(T({})).size() == 2);

  const char* repeated = R"({"p": 5, "group": [[3,1],[3,1]], "conductor": 7})";
  CHECK(error_of([&] { parse_input(repeated); }).code() == ErrorCode::RepeatedPrimes);
  CHECK_NOTHROW(parse_input(repeated, ParseOptions{RepeatedPrimes::Allow, std::nullopt}));
}

TEST_CASE("bundled instances parse") {
  for (const char* name : {"example_quadratic.json", "ordinary_instance.json", "supersingular_instance.json",
                           "selmer_ordinary.json"}) {
    INFO(name);
    CHECK_NOTHROW(parse_input(read(std::string(IWASAWA_SOURCE_DIR) + "/data/instances/" + name)));
  }
}
