#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iwasawa/group_reps.hpp"
#include "iwasawa/linalg.hpp"

namespace iwasawa {

/// The rational group algebra Q[G] on its basis of group elements. Elements
/// are indexed in mixed radix with factor 0 most significant; generator
/// sigma_i adds one to coordinate i.
class GroupAlgebraModel {
 public:
  /// Throws InvalidArgument for |G| above kMaxOrder.
  explicit GroupAlgebraModel(FiniteAbelianGroup g);

  static constexpr std::uint64_t kMaxOrder = 4096;

  const FiniteAbelianGroup& group() const { return group_; }
  std::size_t dimension() const { return order_; }

  /// Permutation of basis indices induced by sigma_i^k.
  std::vector<std::uint32_t> generator_power(std::size_t i, std::uint64_t k) const;
  /// Permutation induced by the element with the given coordinates.
  std::vector<std::uint32_t> element_action(const std::vector<std::uint64_t>& coords) const;

  std::vector<std::uint64_t> coordinates(std::size_t index) const;

  /// Basis (as vectors of length |G|) of the W_beta-isotypic part of Q[G]:
  /// common kernel of Phi_{p_i^{beta_i}}(sigma_i) over all factors. Built as
  /// tensor products of the kernels on each cyclic factor.
  std::vector<linalg::Vector> isotypic_basis(const IndexTuple& beta) const;

  /// Same subspace from one elimination of the stacked operators on all of
  /// Q[G]. Much slower; kept to cross-check isotypic_basis.
  std::vector<linalg::Vector> isotypic_basis_stacked(const IndexTuple& beta) const;

 private:
  FiniteAbelianGroup group_;
  std::size_t order_ = 1;
  std::vector<std::size_t> strides_;
};

/// dim of the W_beta part of Q[G] fixed by G_alpha, by exact elimination.
/// Repeated primes throw RepeatedPrimes unless `policy` allows them.
std::uint64_t oracle_fixed_subspace_dim(const GroupAlgebraModel& model, const IndexTuple& beta,
                                        const IndexTuple& alpha,
                                        RepeatedPrimes policy = RepeatedPrimes::Reject);

/// Variant reusing a basis from model.isotypic_basis(beta).
std::uint64_t oracle_fixed_dim_on(const GroupAlgebraModel& model,
                                 const std::vector<linalg::Vector>& isotypic,
                                 const IndexTuple& alpha);

struct ComponentVerdict {
  IndexTuple tuple;
  std::uint64_t expected_dim = 0;  // irrep_dim
  std::uint64_t basis_dim = 0;     // measured from the kernel
  /// Dimension of the commutant of the G-action; empty above kCommutantCap.
  std::optional<std::uint64_t> commutant_dim;
  /// A group element whose fixed space on the component is proper and
  /// nonzero, when one exists.
  std::optional<std::vector<std::uint64_t>> splitting_element;
  bool irreducible = false;
};

struct DecompositionReport {
  std::uint64_t order = 0;
  std::uint64_t dimension_sum = 0;
  bool dimension_ok = false;
  std::vector<ComponentVerdict> components;
  bool all_irreducible = false;
};

inline constexpr std::uint64_t kCommutantCap = 24;

/// Checks sum dim W_alpha = |G| and tests each W_alpha for irreducibility:
/// the commutant of the action must have dimension dim W_alpha and no group
/// element may fix a proper nonzero subspace.
DecompositionReport verify_regular_decomposition(const FiniteAbelianGroup& g);

}  // namespace iwasawa
