#pragma once

// Test-only reference computations. None of these reuse the code path they
// are compared against.

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <random>

#include "fanohodge/binomial.hpp"
#include "fanohodge/bipoly.hpp"
#include "fanohodge/laurent_poly.hpp"

namespace fanohodge {

inline void PrintTo(const LaurentPoly& p, std::ostream* os) { *os << to_string(p, "q"); }
inline void PrintTo(const BiPoly& p, std::ostream* os) { *os << to_string(p); }

}  // namespace fanohodge

namespace fanohodge::testing {

// Polynomial with unit coefficients at the given exponents.
inline LaurentPoly ones(std::initializer_list<int> exponents) {
  LaurentPoly p;
  for (int e : exponents) p += LaurentPoly::monomial(1, e);
  return p;
}

// [n, m]_q from the product formula, by exact division.
inline LaurentPoly gauss_by_product(int n, int m) {
  LaurentPoly numerator(1);
  LaurentPoly denominator(1);
  for (int l = 0; l < m; ++l) numerator *= LaurentPoly{{0, Integer(1)}, {n - l, Integer(-1)}};
  for (int l = 1; l <= m; ++l) denominator *= LaurentPoly{{0, Integer(1)}, {l, Integer(-1)}};
  return exact_divide(numerator, denominator);
}

// h^{p,q}(Sym^n C) = sum_{s = max(0, p+q-n)}^{min(p,q)} binom(g, p-s) binom(g, q-s),
// the closed coefficient extraction of the Macdonald generating function.
inline Integer sym_hodge_closed(int g, int n, int p, int q) {
  Integer sum = 0;
  for (int s = std::max(0, p + q - n); s <= std::min(p, q); ++s) {
    sum += binomial(g, p - s) * binomial(g, q - s);
  }
  return sum;
}

// E(P^{2g-1}) - (xy)^{g-1} E(P^1) + (xy)^{g-1} E(C), spelled out monomially.
inline BiPoly lemma_k0_oracle(int g) {
  BiPoly rhs;
  for (int p = 0; p <= 2 * g - 1; ++p) rhs += BiPoly::monomial(1, p, p);
  const int s = g - 1;
  rhs -= BiPoly::monomial(1, s, s) + BiPoly::monomial(1, s + 1, s + 1);
  rhs += BiPoly::monomial(1, s, s) + BiPoly::monomial(-g, s + 1, s) + BiPoly::monomial(-g, s, s + 1) +
         BiPoly::monomial(1, s + 1, s + 1);
  return rhs;
}

inline LaurentPoly random_laurent(std::mt19937& rng, int terms = 6) {
  std::uniform_int_distribution<int> exponent(-5, 8);
  std::uniform_int_distribution<long> coefficient(-1000000, 1000000);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p += LaurentPoly::monomial(coefficient(rng), exponent(rng));
  return p;
}

inline BiPoly random_bipoly(std::mt19937& rng, int terms = 6) {
  std::uniform_int_distribution<int> exponent(0, 5);
  std::uniform_int_distribution<long> coefficient(-50, 50);
  BiPoly p;
  for (int i = 0; i < terms; ++i) p += BiPoly::monomial(coefficient(rng), exponent(rng), exponent(rng));
  return p;
}

}  // namespace fanohodge::testing
