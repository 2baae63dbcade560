#include "fanohodge/motivic.hpp"

#include <string>

#include "fanohodge/binomial.hpp"
#include "fanohodge/curves.hpp"
#include "fanohodge/errors.hpp"
#include "fanohodge/fano_odd.hpp"

namespace fanohodge {

MotivicExpression::MotivicExpression(int genus) : genus_(genus) {
  if (genus < 0) throw PreconditionError("MotivicExpression: genus must be non-negative");
}

LaurentPoly MotivicExpression::coefficient(int index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

MotivicExpression& MotivicExpression::add(int index, const LaurentPoly& multiplicity) {
  if (index < 0) throw PreconditionError("MotivicExpression: negative symmetric power");
  LaurentPoly& slot = terms_[index];
  slot += multiplicity;
  if (slot.is_zero()) terms_.erase(index);
  return *this;
}

BiPoly MotivicExpression::e_polynomial() const {
  BiPoly sum;
  for (const auto& [i, multiplicity] : terms_) {
    sum += lefschetz_to_xy(multiplicity) * fanohodge::e_polynomial(sym_curve_diamond(genus_, i));
  }
  return sum;
}

LaurentPoly MotivicExpression::hochschild_polynomial() const {
  LaurentPoly sum;
  for (const auto& [i, multiplicity] : terms_) {
    sum += LaurentPoly(eval_at_one(multiplicity)) *
           fanohodge::hochschild_polynomial(sym_curve_diamond(genus_, i));
  }
  return sum;
}

namespace {

void require_fano_range(int g, int k, const char* who) {
  if (g < 2) throw PreconditionError(std::string(who) + ": g must be at least 2");
  if (k < 0 || k > g - 2) throw PreconditionError(std::string(who) + ": k must lie in [0, g-2]");
}

void require_index(int g, int k, int i, const char* who) {
  require_fano_range(g, k, who);
  if (i < 0 || i > k + 1) throw PreconditionError(std::string(who) + ": i must lie in [0, k+1]");
}

LaurentPoly lefschetz_sum(std::initializer_list<int> exponents) {
  LaurentPoly sum;
  for (int e : exponents) sum += LaurentPoly::monomial(1, e);
  return sum;
}

std::vector<ReportParam> params_gk(int g, int k) { return {{"g", g}, {"k", k}}; }

}  // namespace

LaurentPoly m_polynomial(int g, int k, int i) {
  require_index(g, k, i, "m_polynomial");
  const int n = 2 * g - k - i - 4;

  LaurentPoly bracket = gauss_binomial(2 * g - k - i, k + 1 - i);
  bracket -= lefschetz_sum({g - k - 1, g + 2 * k - 3 * i}) * gauss_binomial(n, k - i);
  bracket -= lefschetz_sum({g - k, g - i, g + k - 2 * i, 3 * g - 3 * k - 4, 3 * g - 2 * k - 4 - i,
                            3 * g - k - 2 * i - 4}) *
             gauss_binomial(n, k - i - 1);
  bracket -= lefschetz_sum({3 * (g - k - 1), 3 * (g - k - 1) + 1, 3 * g - 2 * k - i - 3,
                            3 * g - 2 * k - i - 2}) *
             gauss_binomial(n, k - i - 2);
  bracket -= gauss_binomial(n, k - i - 3).shifted(4 * (g - k) - 2);
  return bracket.shifted(i * (g - k - 1));
}

Integer m_at_one(int g, int k, int i) {
  require_index(g, k, i, "m_at_one");
  const long n = 2L * g - 4 - k - i;
  return binomial(n, k + 1 - i) + 2 * binomial(n, k - i);
}

LaurentPoly bgmn_multiplicity(int g, int i) {
  if (g < 2) throw PreconditionError("bgmn_multiplicity: g must be at least 2");
  if (i < 0 || i > g - 1) throw PreconditionError("bgmn_multiplicity: i must lie in [0, g-1]");
  if (i == g - 1) return LaurentPoly::monomial(1, g - 1);
  return lefschetz_sum({i, 3 * g - 3 - 2 * i});
}

MotivicExpression conjecture_b_expression(int g, int k) {
  require_fano_range(g, k, "conjecture_b_expression");
  MotivicExpression expression(g);
  for (int i = 0; i <= k + 1; ++i) expression.add(i, m_polynomial(g, k, i));
  return expression;
}

VerificationReport verify_conjecture_b(int g, int k) {
  require_fano_range(g, k, "verify_conjecture_b");
  return timed([&] {
    const OddFanoParams params(g, k);
    const int d = params.dimension();

    VerificationReport report{
        .identity = "conjecture-b",
        .params = params_gk(g, k),
        .lhs = e_polynomial(fano_odd_diamond(params)),
        .rhs = BiPoly(),
    };
    MotivicExpression expression(g);
    bool symmetric = true;
    for (int i = 0; i <= k + 1; ++i) {
      const LaurentPoly m = m_polynomial(g, k, i);
      report.effectivity.push_back({i, is_effective(m)});
      symmetric = symmetric && m.inverted().shifted(d - i) == m;
      expression.add(i, m);
    }
    report.rhs = expression.e_polynomial();
    report.lefschetz_symmetric = symmetric;
    return report;
  });
}

VerificationReport verify_lemma_k0(int g) {
  if (g < 2) throw PreconditionError("verify_lemma_k0: g must be at least 2");
  return timed([&] {
    const BiPoly lefschetz_power = BiPoly::monomial(1, g - 1, g - 1);
    BiPoly rhs = e_polynomial(projective_space_diamond(2 * g - 1));
    rhs -= lefschetz_power * e_polynomial(projective_space_diamond(1));
    rhs += lefschetz_power * e_polynomial(curve_diamond(g));
    return VerificationReport{
        .identity = "lemma-k0",
        .params = {{"g", g}},
        .lhs = e_polynomial(fano_odd_diamond(OddFanoParams(g, 0))),
        .rhs = std::move(rhs),
    };
  });
}

VerificationReport verify_bgmn_crosscheck(int g) {
  if (g < 2) throw PreconditionError("verify_bgmn_crosscheck: g must be at least 2");
  return timed([&] {
    MotivicExpression lhs(g);
    MotivicExpression rhs(g);
    for (int i = 0; i <= g - 1; ++i) {
      lhs.add(i, m_polynomial(g, g - 2, i));
      rhs.add(i, bgmn_multiplicity(g, i));
    }
    return VerificationReport{
        .identity = "bgmn",
        .params = {{"g", g}},
        .lhs = std::move(lhs),
        .rhs = std::move(rhs),
        .notes = {"rhs includes the i=0 term 1 + L^{3g-3}; the classical form of this identity "
                  "starts its sum at i=1"},
    };
  });
}

VerificationReport verify_hochschild(int g, int k) {
  require_fano_range(g, k, "verify_hochschild");
  return timed([&] {
    LaurentPoly rhs;
    for (int i = 0; i <= k + 1; ++i) {
      rhs += LaurentPoly(m_at_one(g, k, i)) * hochschild_polynomial(sym_curve_diamond(g, i));
    }
    return VerificationReport{
        .identity = "hochschild",
        .params = params_gk(g, k),
        .lhs = hochschild_polynomial(fano_odd_diamond(OddFanoParams(g, k))),
        .rhs = std::move(rhs),
    };
  });
}

}  // namespace fanohodge
