#pragma once

#include <map>

#include "fanohodge/bipoly.hpp"
#include "fanohodge/laurent_poly.hpp"

namespace fanohodge {

/// Formal sum  sum_i P_i(L) [Sym^i C]  for a fixed genus-g curve C, with
/// P_i in Z[L]. Index 0 is the point class. Zero coefficients are dropped.
class MotivicExpression {
 public:
  explicit MotivicExpression(int genus);

  int genus() const { return genus_; }
  const std::map<int, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coefficient(int index) const;

  /// Adds P(L) [Sym^index C]; index must be non-negative.
  MotivicExpression& add(int index, const LaurentPoly& multiplicity);

  /// Image under the E-polynomial measure: L -> xy, [Sym^i C] -> E(Sym^i C).
  BiPoly e_polynomial() const;

  /// Image under the Hochschild measure: L -> 1, [Sym^i C] -> HH(Sym^i C).
  LaurentPoly hochschild_polynomial() const;

  friend bool operator==(const MotivicExpression&, const MotivicExpression&) = default;

 private:
  int genus_;
  std::map<int, LaurentPoly> terms_;
};

}  // namespace fanohodge
