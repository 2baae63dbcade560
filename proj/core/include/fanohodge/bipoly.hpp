#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "fanohodge/integer.hpp"
#include "fanohodge/laurent_poly.hpp"

namespace fanohodge {

using BiExponent = std::pair<int, int>;

// Integer polynomial in two commuting variables x, y (the target ring of the
// E-polynomial). Zero coefficients are never stored.
class BiPoly {
 public:
  using Terms = std::map<BiExponent, Integer>;

  BiPoly() = default;
  BiPoly(long constant);  // NOLINT(google-explicit-constructor)
  BiPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  BiPoly(std::initializer_list<std::pair<const BiExponent, Integer>> terms);

  static BiPoly monomial(const Integer& coefficient, int px, int py);
  static BiPoly from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(int px, int py) const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  void add_term(const BiExponent& exponent, const Integer& coefficient);

  Terms terms_;
};

// Value at (x, y); negative exponents are rejected with DomainError unless the
// corresponding value is a unit.
Integer evaluate(const BiPoly& p, const Integer& x, const Integer& y);

// The ring morphism Z[x, y] -> Z[z], x, y -> z.
LaurentPoly diagonal(const BiPoly& p);

// Substitution L -> xy, the image of Z[L] under the E-polynomial measure.
BiPoly lefschetz_to_xy(const LaurentPoly& p);

std::string to_string(const BiPoly& p);

}  // namespace fanohodge
