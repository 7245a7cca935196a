#include "iwasawa/group_oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "iwasawa/arith.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

using linalg::IntMatrix;
using linalg::Vector;
using Perm = std::vector<std::uint32_t>;

// (P v)[perm[x]] = v[x]
Vector apply(const Perm& perm, const Vector& v) {
  Vector out(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) out[perm[x]] = v[x];
  return out;
}

// Rank of the family {g b - b : b in basis, g in gens}, columns indexed by basis.
std::size_t displacement_rank(const std::vector<Perm>& gens, const std::vector<Vector>& basis,
                              std::size_t dim) {
  if (basis.empty() || gens.empty()) return 0;
  IntMatrix m(gens.size() * dim, basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Vector moved = apply(gens[gi], basis[c]);
      for (std::size_t x = 0; x < dim; ++x) m(gi * dim + x, c) = moved[x] - basis[c][x];
    }
  }
  return linalg::rank(std::move(m));
}

std::uint64_t commutant_dimension(const std::vector<Perm>& gens, const std::vector<Vector>& basis) {
  const std::size_t k = basis.size();
  if (k == 0) return 0;
  const std::size_t dim = basis.front().size();

  // Rows of B that are linearly independent.
  IntMatrix bt(k, dim);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t x = 0; x < dim; ++x) bt(c, x) = basis[c][x];
  }
  const std::vector<std::size_t> rows = linalg::gauss_jordan(std::move(bt)).pivot_cols;

  // [B_F | (g_1 B)_F | ...] reduces to [D*I | D*A_1 | ...].
  const std::size_t r = gens.size();
  IntMatrix aug(k, k * (1 + r));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < k; ++i) aug(i, c) = basis[c][rows[i]];
    for (std::size_t gi = 0; gi < r; ++gi) {
      const Vector moved = apply(gens[gi], basis[c]);
      for (std::size_t i = 0; i < k; ++i) aug(i, k * (1 + gi) + c) = moved[rows[i]];
    }
  }
  const IntMatrix red = linalg::gauss_jordan(std::move(aug)).matrix;

  // X A_g = A_g X for every generator; unknown X(a, b) sits at column a*k + b.
  IntMatrix sys(r * k * k, k * k);
  for (std::size_t gi = 0; gi < r; ++gi) {
    const std::size_t off = k * (1 + gi);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t c = 0; c < k; ++c) {
        const std::size_t row = gi * k * k + a * k + c;
        for (std::size_t b = 0; b < k; ++b) {
          sys(row, a * k + b) += red(b, off + c);
          sys(row, b * k + c) -= red(a, off + b);
        }
      }
    }
  }
  // W is cyclic, so the commutant has dimension >= k; a mod-p rank certifies equality.
  const std::size_t rank_p = linalg::rank_mod(sys, 2147483647u);
  if (k * k - rank_p == k) return k;
  return k * k - linalg::rank(std::move(sys));
}

// Phi_{p^j}(sigma) on Q[Z/n], sigma the shift x -> x + 1; for j = 0 it is
// sigma - 1. Uses Phi_{p^j}(y) = sum_{t<p} y^(t p^(j-1)).
IntMatrix cyclic_operator(std::size_t n, unsigned long p, unsigned j) {
  IntMatrix m(n, n);
  if (j == 0) {
    for (std::size_t x = 0; x < n; ++x) {
      m((x + 1) % n, x) += 1;
      m(x, x) -= 1;
    }
    return m;
  }
  const std::uint64_t step = arith::ipow(p, j - 1);
  for (std::uint64_t t = 0; t < p; ++t) {
    for (std::size_t x = 0; x < n; ++x) m((x + t * step) % n, x) += 1;
  }
  return m;
}

}  // namespace

GroupAlgebraModel::GroupAlgebraModel(FiniteAbelianGroup g) : group_(std::move(g)) {
  const std::uint64_t n = group_.order();
  if (n > kMaxOrder) {
    throw Error(ErrorCode::InvalidArgument, "group algebra oracle limited to |G| <= " +
                                                std::to_string(kMaxOrder) + ", got " +
                                                std::to_string(n));
  }
  order_ = static_cast<std::size_t>(n);
  strides_.assign(group_.rank(), 1);
  for (std::size_t i = group_.rank(); i-- > 1;) strides_[i - 1] = strides_[i] * group_.cyclic_order(i);
}

std::vector<std::uint64_t> GroupAlgebraModel::coordinates(std::size_t index) const {
  std::vector<std::uint64_t> c(group_.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (index / strides_[i]) % group_.cyclic_order(i);
  return c;
}

std::vector<std::uint32_t> GroupAlgebraModel::element_action(
    const std::vector<std::uint64_t>& coords) const {
  if (coords.size() != group_.rank()) {
    throw Error(ErrorCode::LengthMismatch, "element has wrong number of coordinates");
  }
  Perm perm(order_);
  for (std::size_t x = 0; x < order_; ++x) {
    std::size_t y = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const std::uint64_t n = group_.cyclic_order(i);
      y += ((x / strides_[i]) % n + coords[i] % n) % n * strides_[i];
    }
    perm[x] = static_cast<std::uint32_t>(y);
  }
  return perm;
}

std::vector<std::uint32_t> GroupAlgebraModel::generator_power(std::size_t i, std::uint64_t k) const {
  std::vector<std::uint64_t> coords(group_.rank(), 0);
  coords.at(i) = k;
  return element_action(coords);
}

std::vector<Vector> GroupAlgebraModel::isotypic_basis(const IndexTuple& beta) const {
  validate_tuple(group_, beta);
  // Kernel of Phi_{p^j}(sigma) on Q[Z/N] for each factor, then tensor products.
  std::vector<Vector> acc{Vector{1}};
  for (std::size_t i = 0; i < group_.rank(); ++i) {
    const auto n = static_cast<std::size_t>(group_.cyclic_order(i));
    const std::vector<Vector> local =
        linalg::kernel_basis(cyclic_operator(n, group_.factors()[i].p, beta[i]));
    std::vector<Vector> next;
    next.reserve(acc.size() * local.size());
    for (const auto& u : acc) {
      for (const auto& v : local) {
        Vector w(u.size() * n);
        for (std::size_t a = 0; a < u.size(); ++a) {
          if (sgn(u[a]) == 0) continue;
          for (std::size_t b = 0; b < n; ++b) w[a * n + b] = u[a] * v[b];
        }
        next.push_back(std::move(w));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

std::vector<Vector> GroupAlgebraModel::isotypic_basis_stacked(const IndexTuple& beta) const {
  validate_tuple(group_, beta);
  IntMatrix m;
  for (std::size_t i = 0; i < group_.rank(); ++i) {
    const auto p = group_.factors()[i].p;
    IntMatrix block(order_, order_);
    if (beta[i] == 0) {
      const Perm s = generator_power(i, 1);
      for (std::size_t x = 0; x < order_; ++x) {
        block(s[x], x) += 1;
        block(x, x) -= 1;
      }
    } else {
      const std::uint64_t step = arith::ipow(p, beta[i] - 1);
      for (std::uint64_t t = 0; t < p; ++t) {
        const Perm s = generator_power(i, t * step);
        for (std::size_t x = 0; x < order_; ++x) block(s[x], x) += 1;
      }
    }
    m.append_rows(block);
  }
  if (group_.rank() == 0) m = IntMatrix(1, order_);
  return linalg::kernel_basis(std::move(m));
}

std::uint64_t oracle_fixed_subspace_dim(const GroupAlgebraModel& model, const IndexTuple& beta,
                                        const IndexTuple& alpha, RepeatedPrimes policy) {
  const auto& g = model.group();
  if (!g.distinct_support() && policy == RepeatedPrimes::Reject) {
    throw Error(ErrorCode::RepeatedPrimes,
                "oracle requires pairwise distinct primes; pass the repeated-primes override");
  }
  return oracle_fixed_dim_on(model, model.isotypic_basis(beta), alpha);
}

std::uint64_t oracle_fixed_dim_on(const GroupAlgebraModel& model,
                                 const std::vector<Vector>& isotypic,
                                 const IndexTuple& alpha) {
  const auto& g = model.group();
  validate_tuple(g, alpha);
  // G_alpha is generated by sigma_i^(p_i^alpha_i).
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (alpha[i] == g.factors()[i].n) continue;
    gens.push_back(model.generator_power(i, arith::ipow(g.factors()[i].p, alpha[i])));
  }
  return isotypic.size() - displacement_rank(gens, isotypic, model.dimension());
}

DecompositionReport verify_regular_decomposition(const FiniteAbelianGroup& g) {
  DecompositionReport report;
  report.order = g.order();
  report.dimension_sum = regular_dimension_sum(g);
  report.dimension_ok = report.dimension_sum == report.order;
  report.all_irreducible = true;

  const GroupAlgebraModel model(g);
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(model.generator_power(i, 1));

  // h and any other generator of <h> fix the same subspace.
  std::vector<std::vector<std::uint64_t>> generators;
  std::set<std::vector<bool>> seen;
  for (std::size_t x = 1; x < model.dimension(); ++x) {
    const auto coords = model.coordinates(x);
    std::vector<bool> members(model.dimension(), false);
    std::vector<std::uint64_t> power(coords.size(), 0);
    do {
      std::size_t index = 0;
      for (std::size_t i = 0; i < power.size(); ++i) {
        power[i] = (power[i] + coords[i]) % g.cyclic_order(i);
        index = index * g.cyclic_order(i) + power[i];
      }
      members[index] = true;
    } while (std::any_of(power.begin(), power.end(), [](std::uint64_t c) { return c != 0; }));
    if (seen.insert(std::move(members)).second) generators.push_back(coords);
  }

  for (const auto& alpha : enumerate_index_tuples(g)) {
    ComponentVerdict v;
    v.tuple = alpha;
    v.expected_dim = irrep_dim(g, alpha);
    const std::vector<Vector> basis = model.isotypic_basis(alpha);
    v.basis_dim = basis.size();
    if (v.basis_dim <= kCommutantCap) v.commutant_dim = commutant_dimension(gens, basis);

    for (const auto& coords : generators) {
      if (v.splitting_element) break;
      const std::size_t rk = displacement_rank({model.element_action(coords)}, basis, model.dimension());
      if (rk > 0 && rk < basis.size()) v.splitting_element = coords;
    }

    v.irreducible = v.basis_dim == v.expected_dim && !v.splitting_element &&
                    (!v.commutant_dim || *v.commutant_dim == v.basis_dim);
    report.all_irreducible = report.all_irreducible && v.irreducible;
    report.components.push_back(std::move(v));
  }
  return report;
}

}  // namespace iwasawa
