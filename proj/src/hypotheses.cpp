#include "iwasawa/hypotheses.hpp"

#include "iwasawa/arith.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p == 2) throw Error(ErrorCode::EvenPrime, "p = 2 is not supported; p must be an odd prime");
  if (!arith::is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
}

}  // namespace

FieldDescriptor FieldDescriptor::make(FiniteAbelianGroup group, std::uint64_t conductor) {
  if (conductor == 0) throw Error(ErrorCode::HypothesisField, "conductor must be positive");
  const std::uint64_t phi = arith::totient(conductor);
  if (phi % group.exponent() != 0) {
    throw Error(ErrorCode::HypothesisField,
                "group exponent " + std::to_string(group.exponent()) + " does not divide phi(" +
                    std::to_string(conductor) + ") = " + std::to_string(phi) +
                    "; no abelian field of this conductor has that Galois group");
  }
  return {std::move(group), conductor};
}

bool within_hasse(long a, std::uint64_t ell) {
  const auto mag = static_cast<std::uint64_t>(a < 0 ? -a : a);
  return mag * mag <= 4 * ell;
}

void check_hasse(const CurveData& c) {
  for (auto [ell, a] : c.ap) {
    if (c.conductor && *c.conductor % ell == 0) continue;
    if (!within_hasse(a, ell)) {
      throw Error(ErrorCode::HasseBound, "curve " + c.label + ": a_" + std::to_string(ell) +
                                             " = " + std::to_string(a) + " violates the Hasse bound");
    }
  }
}

std::string_view to_string(Reduction r) {
  switch (r) {
    case Reduction::Ordinary: return "ordinary";
    case Reduction::Supersingular: return "supersingular";
    case Reduction::Unsupported: return "unsupported";
  }
  return "?";
}

std::uint64_t group_exponent(const FiniteAbelianGroup& g) { return g.exponent(); }

StarVerdict star_check_modulus(std::uint64_t m, std::uint64_t p) {
  require_odd_prime(p);
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "modulus must be positive");
  StarVerdict v;
  v.m = m;
  std::uint64_t rest = m;
  while (rest % p == 0) {
    rest /= p;
    ++v.witness.r;
  }
  v.witness.m_prime = rest;
  v.witness.totient = arith::totient(rest);
  v.witness.order = rest <= 2 ? 1 : arith::multiplicative_order(p % rest, rest);
  v.pass = v.witness.order == v.witness.totient;
  return v;
}

StarVerdict star_check(const FiniteAbelianGroup& g, std::uint64_t p) {
  return star_check_modulus(group_exponent(g), p);
}

bool HypothesisReport::all_pass() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

HypothesisReport field_hypotheses(const FieldDescriptor& k, std::uint64_t p) {
  require_odd_prime(p);
  const unsigned v = arith::valuation(k.conductor, p);
  const std::string witness = "v_" + std::to_string(p) + "(" + std::to_string(k.conductor) +
                              ") = " + std::to_string(v);
  HypothesisReport report;
  report.verdicts.push_back({"p-unramified", v == 0, witness});
  report.verdicts.push_back({"disjoint-from-cyclotomic", v < 2, witness});
  return report;
}

Reduction reduction_type(long ap, std::uint64_t p) {
  require_odd_prime(p);
  if (!within_hasse(ap, p)) {
    throw Error(ErrorCode::HasseBound, "a_p = " + std::to_string(ap) +
                                           " violates |a_p| <= 2 sqrt(p) for p = " + std::to_string(p));
  }
  if (ap == 0) return Reduction::Supersingular;
  if (ap % static_cast<long>(p) != 0) return Reduction::Ordinary;
  return Reduction::Unsupported;
}

}  // namespace iwasawa
