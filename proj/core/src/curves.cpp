#include "fanohodge/curves.hpp"

#include <string>
#include <vector>

#include "fanohodge/binomial.hpp"
#include "fanohodge/errors.hpp"

namespace fanohodge {

namespace {

void require_non_negative(int value, const char* what) {
  if (value < 0) throw PreconditionError(std::string(what) + " must be non-negative");
}

// Power series in t with BiPoly coefficients, truncated after t^order.
using Series = std::vector<BiPoly>;

Series multiply(const Series& a, const Series& b, std::size_t order) {
  Series out(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// 1 / (1 - m t) = sum_r m^r t^r.
Series geometric(const BiPoly& m, std::size_t order) {
  Series out(order + 1);
  out[0] = BiPoly(1);
  for (std::size_t r = 1; r <= order; ++r) out[r] = out[r - 1] * m;
  return out;
}

Series power(const Series& base, int exponent, std::size_t order) {
  Series out(order + 1);
  out[0] = BiPoly(1);
  for (int i = 0; i < exponent; ++i) out = multiply(out, base, order);
  return out;
}

}  // namespace

HodgeDiamond curve_diamond(int g) {
  require_non_negative(g, "genus");
  const Integer genus = g;
  return HodgeDiamond(1, {{Integer(1), genus}, {genus, Integer(1)}});
}

HodgeDiamond sym_curve_diamond(int g, int n) {
  require_non_negative(g, "genus");
  require_non_negative(n, "symmetric power");
  const auto order = static_cast<std::size_t>(n);

  const Series one_minus_xt = {BiPoly(1), BiPoly::monomial(-1, 1, 0)};
  const Series one_minus_yt = {BiPoly(1), BiPoly::monomial(-1, 0, 1)};

  Series series = multiply(power(one_minus_xt, g, order), power(one_minus_yt, g, order), order);
  series = multiply(series, geometric(BiPoly(1), order), order);
  series = multiply(series, geometric(BiPoly::monomial(1, 1, 1), order), order);
  const BiPoly& e = series[order];

  return HodgeDiamond::from_function(n, [&](int p, int q) {
    Integer h = e.coefficient(p, q);
    if ((p + q) % 2 != 0) h = -h;
    if (h < 0) {
      throw ConsistencyError("sym_curve_diamond: negative Hodge number h^{" + std::to_string(p) +
                             "," + std::to_string(q) + "}");
    }
    return h;
  });
}

HodgeDiamond jacobian_diamond(int g) {
  require_non_negative(g, "genus");
  return HodgeDiamond::from_function(g, [g](int p, int q) -> Integer { return binomial(g, p) * binomial(g, q); });
}

HodgeDiamond projective_space_diamond(int n) {
  require_non_negative(n, "dimension");
  return HodgeDiamond::from_function(n, [](int p, int q) { return Integer(p == q ? 1 : 0); });
}

}  // namespace fanohodge
