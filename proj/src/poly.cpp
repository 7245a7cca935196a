#include "iwasawa/poly.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

constexpr std::size_t kSchoolbookCutoff = 24;

// Writes |c| into dst (exactly `limbs` limbs, zero padded). Caller guarantees fit.
void store_limbs(const mpz_class& c, mp_limb_t* dst, std::size_t limbs) {
  const std::size_t n = mpz_size(c.get_mpz_t());
  const mp_limb_t* src = mpz_limbs_read(c.get_mpz_t());
  std::copy(src, src + n, dst);
  std::fill(dst + n, dst + limbs, mp_limb_t{0});
}

mpz_class load_limbs(const mp_limb_t* src, std::size_t limbs) {
  while (limbs > 0 && src[limbs - 1] == 0) --limbs;
  mpz_class out;
  if (limbs == 0) return out;
  mp_limb_t* dst = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(limbs));
  std::copy(src, src + limbs, dst);
  mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(limbs));
  return out;
}

// Packs sum c_i 2^(64*slot*i) as a signed integer.
mpz_class pack(const IntPoly& a, std::size_t slot) {
  const std::size_t total = a.size() * slot;
  std::vector<mp_limb_t> pos(total, 0), neg(total, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const mpz_class& c = a.coeffs()[i];
    if (sgn(c) > 0) {
      store_limbs(c, pos.data() + i * slot, slot);
    } else if (sgn(c) < 0) {
      store_limbs(c, neg.data() + i * slot, slot);
      any_neg = true;
    }
  }
  mpz_class packed = load_limbs(pos.data(), total);
  if (any_neg) packed -= load_limbs(neg.data(), total);
  return packed;
}

std::size_t l1_bits(const IntPoly& a) {
  mpz_class sum;
  for (const auto& c : a.coeffs()) sum += abs(c);
  return mpz_sizeinbase(sum.get_mpz_t(), 2);
}

std::size_t max_bits(const IntPoly& a) {
  std::size_t bits = 0;
  for (const auto& c : a.coeffs()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

bool IntPoly::is_distinguished(unsigned long p) const {
  if (!is_monic()) return false;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    if (!mpz_divisible_ui_p(coeffs_[i].get_mpz_t(), p)) return false;
  }
  return true;
}

mpz_class IntPoly::content() const {
  mpz_class g;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class IntPoly::evaluate(const mpz_class& at) const {
  mpz_class acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "x";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPoly& IntPoly::divide_coefficients(const mpz_class& c) {
  if (sgn(c) == 0) throw Error(ErrorCode::InvalidArgument, "division of coefficients by zero");
  for (auto& x : coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
      throw Error(ErrorCode::InexactDivision, "coefficient " + x.get_str() +
                                                  " is not divisible by " + c.get_str());
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (std::min(a.size(), b.size()) < kSchoolbookCutoff) return multiply_schoolbook(a, b);
  return multiply_kronecker(a, b);
}

IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const mpz_class& ai = a.coeffs()[i];
    if (sgn(ai) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), ai.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly multiply_kronecker(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Every product coefficient is bounded by ||a||_1 * ||b||_inf (and symmetrically);
  // one extra bit keeps balanced digits strictly inside the slot.
  const std::size_t bound = std::min(l1_bits(a) + max_bits(b), l1_bits(b) + max_bits(a));
  const std::size_t slot = (bound + 1 + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;

  mpz_class product = pack(a, slot) * pack(b, slot);
  const int sign = sgn(product);
  product = abs(product);

  const std::size_t terms = a.size() + b.size() - 1;
  std::vector<mp_limb_t> limbs(terms * slot + 1, 0);
  const std::size_t used = mpz_size(product.get_mpz_t());
  if (used > limbs.size()) throw Error(ErrorCode::InvalidArgument, "kronecker slot overflow");
  const mp_limb_t* src = mpz_limbs_read(product.get_mpz_t());
  std::copy(src, src + used, limbs.begin());

  mpz_class half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, slot * GMP_NUMB_BITS - 1);
  const mpz_class full = half * 2;

  std::vector<mpz_class> out(terms);
  bool carry = false;
  for (std::size_t i = 0; i < terms; ++i) {
    mpz_class digit = load_limbs(limbs.data() + i * slot, slot);
    if (carry) digit += 1;
    carry = digit >= half;
    if (carry) digit -= full;
    out[i] = sign < 0 ? mpz_class(-digit) : digit;
  }
  if (carry || limbs[terms * slot] != 0) {
    throw Error(ErrorCode::InvalidArgument, "kronecker unpack left a carry");
  }
  return IntPoly(std::move(out));
}

IntPoly power(const IntPoly& base, unsigned exp) {
  IntPoly result = IntPoly::constant(1);
  IntPoly sq = base;
  while (exp > 0) {
    if (exp & 1U) result *= sq;
    exp >>= 1U;
    if (exp > 0) sq *= sq;
  }
  return result;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) {
    throw Error(ErrorCode::InexactDivision, "inexact: degree of dividend below divisor");
  }
  std::vector<mpz_class> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t dq = rem.size() - 1 - db;
  std::vector<mpz_class> q(dq + 1);
  const mpz_class& lb = b.leading();
  mpz_class t;
  for (std::size_t k = dq + 1; k-- > 0;) {
    mpz_class& top = rem[k + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw Error(ErrorCode::InexactDivision, "inexact: leading coefficient " + top.get_str() +
                                                  " not divisible by " + lb.get_str());
    }
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
    q[k] = t;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (sgn(rem[i]) != 0) throw Error(ErrorCode::InexactDivision, "inexact: nonzero remainder");
  }
  return IntPoly(std::move(q));
}

PseudoDivision pseudo_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "pseudo-division by zero");
  if (a.degree() < b.degree()) return {IntPoly{}, a, mpz_class(1)};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t delta = static_cast<std::size_t>(a.degree()) - db;
  const mpz_class& lb = b.leading();
  std::vector<mpz_class> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<mpz_class> q(delta + 1);
  for (std::size_t k = delta + 1; k-- > 0;) {
    const mpz_class top = r[k + db];
    for (auto& c : q) c *= lb;
    q[k] += top;
    for (std::size_t i = 0; i < k + db; ++i) r[i] *= lb;
    r[k + db] = 0;
    if (sgn(top) != 0) {
      for (std::size_t j = 0; j < db; ++j) {
        mpz_submul(r[k + j].get_mpz_t(), top.get_mpz_t(), b.coeffs()[j].get_mpz_t());
      }
    }
  }
  mpz_class mult;
  mpz_pow_ui(mult.get_mpz_t(), lb.get_mpz_t(), delta + 1);
  r.resize(db);
  return {IntPoly(std::move(q)), IntPoly(std::move(r)), mult};
}

IntPoly binomial_power(std::size_t n) {
  std::vector<mpz_class> c(n + 1);
  c[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    c[k + 1] = c[k] * static_cast<unsigned long>(n - k);
    mpz_divexact_ui(c[k + 1].get_mpz_t(), c[k + 1].get_mpz_t(), k + 1);
  }
  return IntPoly(std::move(c));
}

}  // namespace iwasawa
