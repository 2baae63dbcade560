#include "fanohodge/bipoly.hpp"

#include <sstream>

#include "fanohodge/errors.hpp"

namespace fanohodge {

BiPoly::BiPoly(long constant) : BiPoly(Integer(constant)) {}

BiPoly::BiPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(BiExponent{0, 0}, constant);
}

BiPoly::BiPoly(std::initializer_list<std::pair<const BiExponent, Integer>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

BiPoly BiPoly::monomial(const Integer& coefficient, int px, int py) {
  BiPoly p;
  p.add_term({px, py}, coefficient);
  return p;
}

BiPoly BiPoly::from_terms(Terms terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  BiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Integer BiPoly::coefficient(int px, int py) const {
  auto it = terms_.find({px, py});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BiPoly::add_term(const BiExponent& exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  *this = *this * other;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  Integer product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      product = ca * cb;
      out.add_term({ea.first + eb.first, ea.second + eb.second}, product);
    }
  }
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

namespace {

Integer power(const Integer& base, int exponent) {
  const bool unit = base == 1 || base == -1;
  if (exponent < 0 && !unit) throw DomainError("evaluate: negative exponent at a non-unit point");
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return out;
}

}  // namespace

Integer evaluate(const BiPoly& p, const Integer& x, const Integer& y) {
  Integer sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c * power(x, e.first) * power(y, e.second);
  return sum;
}

LaurentPoly diagonal(const BiPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out += LaurentPoly::monomial(c, e.first + e.second);
  return out;
}

BiPoly lefschetz_to_xy(const LaurentPoly& p) {
  BiPoly::Terms terms;
  for (const auto& [e, c] : p.terms()) terms.emplace(BiExponent{e, e}, c);
  return BiPoly::from_terms(std::move(terms));
}

namespace {

void write_power(std::ostringstream& out, char var, int exponent) {
  if (exponent == 0) return;
  out << var;
  if (exponent != 1) out << '^' << exponent;
}

}  // namespace

std::string to_string(const BiPoly& p) {
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
    const bool constant = e.first == 0 && e.second == 0;
    if (constant || magnitude != 1) out << magnitude.get_str();
    write_power(out, 'x', e.first);
    write_power(out, 'y', e.second);
  }
  return out.str();
}

}  // namespace fanohodge
