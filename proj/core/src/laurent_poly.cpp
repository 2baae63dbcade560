#include "fanohodge/laurent_poly.hpp"

#include <sstream>

#include "fanohodge/errors.hpp"

namespace fanohodge {

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, Integer>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& coefficient, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<int> LaurentPoly::min_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
  return out;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

void LaurentPoly::add_term(int exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  Integer product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      product = ca * cb;
      out.add_term(ea + eb, product);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("exact_divide: division by the zero polynomial");
  if (num.is_zero()) return {};

  // Normalize both sides to honest polynomials with the divisor's constant
  // term nonzero; then Laurent divisibility equals polynomial divisibility.
  const int den_shift = *den.min_degree();
  const int num_shift = *num.min_degree();
  const LaurentPoly divisor = den.shifted(-den_shift);
  LaurentPoly remainder = num.shifted(-num_shift);

  const int divisor_degree = *divisor.max_degree();
  const Integer& lead = divisor.terms().rbegin()->second;

  LaurentPoly quotient;
  Integer factor;
  while (!remainder.is_zero()) {
    const int top = *remainder.max_degree();
    const int step = top - divisor_degree;
    if (step < 0) {
      throw InexactDivisionError("exact_divide: nonzero remainder " + to_string(remainder));
    }
    const Integer& top_coefficient = remainder.terms().rbegin()->second;
    if (!mpz_divisible_p(top_coefficient.get_mpz_t(), lead.get_mpz_t())) {
      throw InexactDivisionError("exact_divide: coefficient quotient is not integral");
    }
    mpz_divexact(factor.get_mpz_t(), top_coefficient.get_mpz_t(), lead.get_mpz_t());
    const LaurentPoly term = LaurentPoly::monomial(factor, step);
    quotient += term;
    remainder -= term * divisor;
  }
  return quotient.shifted(num_shift - den_shift);
}

Integer eval_at_one(const LaurentPoly& p) {
  Integer sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

Integer evaluate(const LaurentPoly& p, const Integer& value) {
  const bool unit = value == 1 || value == -1;
  Integer sum = 0;
  Integer power;
  for (const auto& [e, c] : p.terms()) {
    if (e < 0 && !unit) throw DomainError("evaluate: negative exponent at a non-unit point");
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    sum += c * power;
  }
  return sum;
}

bool is_effective(const LaurentPoly& p) {
  for (const auto& [e, c] : p.terms()) {
    if (c < 0) return false;
  }
  return true;
}

std::string to_string(const LaurentPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str();
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

}  // namespace fanohodge
