#include "iwasawa/selmer_shape.hpp"

#include <string>

#include "iwasawa/error.hpp"

namespace iwasawa {

std::string_view to_string(ShapeReduction r) {
  switch (r) {
    case ShapeReduction::Ordinary: return "ordinary";
    case ShapeReduction::SupersingularPlus: return "supersingular+";
    case ShapeReduction::SupersingularMinus: return "supersingular-";
  }
  return "?";
}

ShapeReduction parse_shape_reduction(std::string_view s) {
  if (s == "ordinary") return ShapeReduction::Ordinary;
  if (s == "supersingular+") return ShapeReduction::SupersingularPlus;
  if (s == "supersingular-") return ShapeReduction::SupersingularMinus;
  throw Error(ErrorCode::MalformedShape, "unknown reduction \"" + std::string(s) +
                                             "\" (expected ordinary, supersingular+ or supersingular-)");
}

void SelmerShape::check_well_formed() const {
  for (const auto& g : generic) {
    if (g.degree == 0) throw Error(ErrorCode::MalformedShape, "generic factor " + g.label + " has degree 0");
    if (g.exponent == 0) {
      throw Error(ErrorCode::MalformedShape, "generic factor " + g.label + " has exponent 0");
    }
  }
  for (auto [a, f] : cyclo_multi) {
    if (f < 2) {
      throw Error(ErrorCode::MalformedShape, "cyclotomic factor Phi_" + std::to_string(a) +
                                                 " listed with exponent " + std::to_string(f) +
                                                 "; multi-exponent factors need f >= 2");
    }
  }
}

}  // namespace iwasawa
