#include "iwasawa/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

std::vector<std::uint64_t> signed_ranks(const GrowthSummary& gs, Sign sign) {
  std::vector<std::uint64_t> r(gs.e.size());
  for (unsigned n = 0; n < r.size(); ++n) {
    r[n] = (n > 0 && t_sign(sign, n) == 1) ? gs.e[n] - gs.theta[n] : gs.e[n];
  }
  return r;
}

CharIdeal ideal_of(std::uint64_t p, const std::vector<std::uint64_t>& exps) {
  std::map<unsigned, unsigned long> m;
  for (unsigned n = 0; n < exps.size(); ++n) m[n] = exps[n];
  return CharIdeal::from_exponents(p, 0, m);
}

void check_summary(const GrowthSummary& gs) {
  if (gs.theta.size() != gs.e.size()) {
    throw Error(ErrorCode::LengthMismatch, "e and theta have different lengths");
  }
  for (unsigned n = 0; n < gs.e.size(); ++n) {
    if (gs.theta[n] > gs.e[n]) {
      throw Error(ErrorCode::NegativeCorank, "theta_" + std::to_string(n) + " exceeds e_" + std::to_string(n));
    }
  }
}

EquivariantDecomposition collect(const FiniteAbelianGroup& g, const EAlphaTable& ea,
                                 const std::function<std::uint64_t(unsigned)>& shift) {
  EquivariantDecomposition d;
  for (unsigned k = 0; k <= ea.max_level; ++k) {
    for (const auto& alpha : enumerate_index_tuples(g)) {
      const std::uint64_t e = ea.at(alpha, k);
      if (e == 0) continue;
      const std::uint64_t t = shift(k);
      if (e > t) d.summands.push_back({alpha, k, e - t});
    }
  }
  return d;
}

}  // namespace

FineStructure fine_mw_structure(std::uint64_t p, const GrowthSummary& gs) {
  check_summary(gs);
  std::vector<std::uint64_t> exps(gs.e.size());
  for (unsigned n = 0; n < exps.size(); ++n) exps[n] = gs.e[n] - gs.theta[n];
  return {ideal_of(p, exps), exps};
}

PMStructure pm_mw_structure(std::uint64_t p, const GrowthSummary& gs, Reduction reduction) {
  if (reduction != Reduction::Supersingular) {
    throw Error(ErrorCode::Precondition, "pm requires supersingular reduction (a_p = 0), got " +
                                             std::string(to_string(reduction)));
  }
  check_summary(gs);
  PMStructure s{signed_ranks(gs, Sign::Plus), signed_ranks(gs, Sign::Minus), CharIdeal(p), CharIdeal(p),
                CharIdeal(p)};
  s.char_plus = ideal_of(p, s.r_plus);
  s.char_minus = ideal_of(p, s.r_minus);
  std::vector<std::uint64_t> g(gs.e.size());
  for (unsigned n = 0; n < g.size(); ++n) g[n] = n == 0 ? gs.e[0] : gs.e[n] - gs.theta[n];
  s.gcd = ideal_of(p, g);
  return s;
}

std::uint64_t EquivariantDecomposition::contracted(const FiniteAbelianGroup& g, unsigned k) const {
  std::uint64_t sum = 0;
  for (const auto& s : summands) {
    if (s.level == k) sum += s.multiplicity * irrep_dim(g, s.alpha);
  }
  return sum;
}

EquivariantDecomposition equivariant_fine(const FiniteAbelianGroup& g, const EAlphaTable& ea) {
  return collect(g, ea, [](unsigned) { return std::uint64_t{1}; });
}

unsigned t_sign(Sign sign, unsigned k) {
  if (sign == Sign::Plus) return k % 2 == 1 ? 1 : 0;
  return (k > 0 && k % 2 == 0) ? 1 : 0;
}

EquivariantDecomposition equivariant_pm(const FiniteAbelianGroup& g, const EAlphaTable& ea, Sign sign) {
  return collect(g, ea, [sign](unsigned k) { return std::uint64_t{t_sign(sign, k)}; });
}

CharIdeal greenberg_rhs(std::uint64_t p, const std::vector<std::uint64_t>& e) {
  std::vector<std::uint64_t> exps(e.size());
  for (unsigned n = 0; n < e.size(); ++n) exps[n] = e[n] > 0 ? e[n] - 1 : 0;
  return ideal_of(p, exps);
}

CharIdeal kp_rhs(std::uint64_t p, const std::vector<std::uint64_t>& e) {
  std::vector<std::uint64_t> exps(e.size());
  for (unsigned n = 0; n < e.size(); ++n) exps[n] = n == 0 ? e[0] : (e[n] > 0 ? e[n] - 1 : 0);
  return ideal_of(p, exps);
}

CharIdeal selmer_gcd(std::uint64_t p, const std::vector<std::uint64_t>& e, std::uint64_t t) {
  const std::uint64_t e0 = e.empty() ? 0 : e[0];
  if (t < e0) {
    throw Error(ErrorCode::Precondition,
                "t = " + std::to_string(t) + " < e_0 = " + std::to_string(e0) + "; the formula needs t >= e_0");
  }
  std::vector<std::uint64_t> exps(std::max<std::size_t>(e.size(), 1));
  exps[0] = t;
  for (unsigned n = 1; n < e.size(); ++n) exps[n] = e[n] > 1 ? e[n] - 1 : 0;
  return ideal_of(p, exps);
}

ValidationReport validate_selmer_shape(const SelmerShape& s, const std::optional<GrowthSummary>& gs) {
  s.check_well_formed();
  ValidationReport rep;
  auto add = [&rep](ConstraintVerdict v) {
    rep.accepted = rep.accepted && v.pass;
    rep.verdicts.push_back(std::move(v));
  };

  std::map<unsigned, unsigned> multi_count;
  for (auto [a, f] : s.cyclo_multi) ++multi_count[a];
  {
    ConstraintVerdict v{"distinct-a", true, "", "the a_j in the cyclotomic part are distinct"};
    for (auto [a, c] : multi_count) {
      if (c > 1) {
        v.pass = false;
        v.detail += (v.detail.empty() ? "" : "; ") + std::string("duplicate a_j = ") + std::to_string(a) +
                    " (" + std::to_string(c) + " summands)";
      }
    }
    add(std::move(v));
  }

  if (s.reduction != ShapeReduction::Ordinary) {
    const bool plus = s.reduction == ShapeReduction::SupersingularPlus;
    ConstraintVerdict v{plus ? "parity-plus" : "parity-minus", true, "",
                        plus ? "under the plus theory every a_m is even"
                             : "under the minus theory every a_m is odd or 0"};
    for (auto [a, f] : s.cyclo_multi) {
      const bool ok = plus ? a % 2 == 0 : (a % 2 == 1 || a == 0);
      if (!ok) {
        v.pass = false;
        v.detail += (v.detail.empty() ? "" : "; ") + std::string("a_m = ") + std::to_string(a) +
                    (plus ? " is odd" : " is even and nonzero");
      }
    }
    add(std::move(v));
  }

  for (auto [a, f] : s.cyclo_multi) rep.sha_cyclo.emplace_back(a, f - 1);
  std::sort(rep.sha_cyclo.begin(), rep.sha_cyclo.end());
  rep.sha_generic = s.generic;
  rep.cyclic = std::all_of(multi_count.begin(), multi_count.end(), [](auto kv) { return kv.second == 1; });

  if (gs) {
    check_summary(*gs);
    std::vector<std::uint64_t> target;
    std::string source;
    switch (s.reduction) {
      case ShapeReduction::Ordinary:
        target = gs->e;
        source = "e_n";
        break;
      case ShapeReduction::SupersingularPlus:
        target = signed_ranks(*gs, Sign::Plus);
        source = "r_n^+";
        break;
      case ShapeReduction::SupersingularMinus:
        target = signed_ranks(*gs, Sign::Minus);
        source = "r_n^-";
        break;
    }
    std::map<unsigned, std::uint64_t> count;
    for (auto [a, f] : s.cyclo_multi) ++count[a];
    for (unsigned b : s.cyclo_simple) ++count[b];
    ConstraintVerdict v{"mordell-weil-count", true, "",
                        "the cyclotomic summands at level n number the Mordell-Weil exponent there"};
    std::set<unsigned> levels;
    for (auto [n, c] : count) levels.insert(n);
    for (unsigned n = 0; n < target.size(); ++n) levels.insert(n);
    for (unsigned n : levels) {
      if (n >= target.size()) {
        rep.unchecked_levels.push_back(n);
        continue;
      }
      const std::uint64_t c = count.count(n) ? count[n] : 0;
      if (c != target[n]) {
        v.pass = false;
        v.detail += (v.detail.empty() ? "" : "; ") + std::string("level ") + std::to_string(n) + ": " +
                    std::to_string(c) + " summands, " + source + " = " + std::to_string(target[n]);
      }
    }
    add(std::move(v));
  }
  return rep;
}

}  // namespace iwasawa
