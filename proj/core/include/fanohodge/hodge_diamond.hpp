#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fanohodge/bipoly.hpp"
#include "fanohodge/integer.hpp"
#include "fanohodge/laurent_poly.hpp"

namespace fanohodge {

/// Hodge numbers h^{p,q}, 0 <= p, q <= d, of a smooth projective variety of
/// dimension d. Construction validates non-negativity, Hodge symmetry
/// h^{p,q} = h^{q,p} and Serre duality h^{p,q} = h^{d-p,d-q}; a violating
/// table throws DomainError.
class HodgeDiamond {
 public:
  /// rows[p][q] = h^{p,q}; rows must be (d+1) x (d+1).
  HodgeDiamond(int dimension, std::vector<std::vector<Integer>> rows);

  static HodgeDiamond point();
  static HodgeDiamond from_function(int dimension,
                                    const std::function<Integer(int p, int q)>& entry);

  int dimension() const { return dimension_; }

  /// h^{p,q}; zero outside 0 <= p, q <= d.
  Integer operator()(int p, int q) const;

  std::vector<std::vector<Integer>> rows() const;

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;

 private:
  int dimension_;
  std::vector<Integer> entries_;  // row-major, (d+1)^2
};

/// Sum over p, q of (-1)^{p+q} h^{p,q} x^p y^q.
BiPoly e_polynomial(const HodgeDiamond& dia);

/// Sum over i of dim HH_i t^i with dim HH_i = sum_{q-p=i} h^{p,q}.
LaurentPoly hochschild_polynomial(const HodgeDiamond& dia);

/// b_m = sum_{p+q=m} h^{p,q}; RangeError unless 0 <= m <= 2d.
Integer betti(const HodgeDiamond& dia, int m);

/// Sum over m of b_m z^m.
LaurentPoly poincare_polynomial(const HodgeDiamond& dia);

Integer euler(const HodgeDiamond& dia);

HodgeDiamond kunneth_product(const HodgeDiamond& a, const HodgeDiamond& b);

bool is_hodge_tate(const HodgeDiamond& dia);

/// Centered rendering: one line per degree m = 0..2d, entries with p - q
/// increasing left to right, right-aligned in cells of common width.
std::string render_text(const HodgeDiamond& dia);

}  // namespace fanohodge
