#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "fanohodge/integer.hpp"

namespace fanohodge {

// Univariate Laurent polynomial with exact integer coefficients. The variable
// is contextual: q for q-binomials, L for the Lefschetz class, t for the
// Hochschild grading. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::pair<const int, Integer>> terms);

  static LaurentPoly monomial(const Integer& coefficient, int exponent);
  static LaurentPoly from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(int exponent) const;
  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;

  // Multiplication by var^shift.
  LaurentPoly shifted(int shift) const;
  // p(var) -> p(1/var).
  LaurentPoly inverted() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  void add_term(int exponent, const Integer& coefficient);

  Terms terms_;
};

// Quotient num / den in Z[var, var^-1]; throws InexactDivisionError when the
// remainder is nonzero or a coefficient quotient leaves Z, DomainError when
// den is zero.
LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den);

// Sum of all coefficients, i.e. the value at var = 1.
Integer eval_at_one(const LaurentPoly& p);

// Evaluation at an integer point; negative exponents require value = +-1.
Integer evaluate(const LaurentPoly& p, const Integer& value);

bool is_effective(const LaurentPoly& p);

// Human-readable form, e.g. "1 + 2L^3 - L^-1"; terms in increasing degree.
std::string to_string(const LaurentPoly& p, std::string_view var = "q");

}  // namespace fanohodge
