#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iwasawa {

enum class ShapeReduction { Ordinary, SupersingularPlus, SupersingularMinus };

std::string_view to_string(ShapeReduction r);
/// Accepts "ordinary", "supersingular+", "supersingular-"; throws MalformedShape.
ShapeReduction parse_shape_reduction(std::string_view s);

struct GenericFactor {
  std::string label;
  std::uint64_t degree = 0;    // d_i * deg g_i
  std::uint64_t exponent = 0;  // l_i
  friend bool operator==(const GenericFactor&, const GenericFactor&) = default;
};

/// Candidate elementary decomposition of a Selmer dual:
/// prod g_i^{l_i} (generic, coprime to every Phi_n) times prod Phi_{a_j}^{f_j}
/// (f_j >= 2) times prod Phi_{b_k}.
struct SelmerShape {
  ShapeReduction reduction = ShapeReduction::Ordinary;
  std::vector<GenericFactor> generic;
  std::vector<std::pair<unsigned, std::uint64_t>> cyclo_multi;  // (a_j, f_j)
  std::vector<unsigned> cyclo_simple;                           // b_k

  /// Throws MalformedShape for f_j < 2, zero degrees or exponents.
  void check_well_formed() const;
};

}  // namespace iwasawa
