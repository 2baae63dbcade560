#include "fanohodge/fano_even.hpp"

#include "fanohodge/binomial.hpp"
#include "fanohodge/errors.hpp"

namespace fanohodge {

EvenFanoParams::EvenFanoParams(int g, int k) : g_(g), k_(k) {
  if (g < 2) throw PreconditionError("EvenFanoParams: g must be at least 2");
  if (k < 0 || k > g - 2) throw PreconditionError("EvenFanoParams: k must lie in [0, g-2]");
}

Integer fano_even_betti(const EvenFanoParams& params, int p) {
  const int g = params.g();
  const int k = params.k();
  if (p < 0 || p > params.dimension()) return 0;
  Integer sum = 0;
  for (int j = 0; j <= k + 1; ++j) {
    const int r = p - j * (g - k - 1);
    if (r < 0) continue;
    sum += binomial(2 * g + 1, j) * gauss_binomial(2 * g - k - j - 1, k + 1 - j).coefficient(r);
  }
  return sum;
}

HodgeDiamond fano_even_diamond(const EvenFanoParams& params) {
  return HodgeDiamond::from_function(params.dimension(), [&](int p, int q) {
    return p == q ? fano_even_betti(params, p) : Integer(0);
  });
}

Integer euler_closed_form(int g, int k) {
  if (g < 2) throw PreconditionError("euler_closed_form: g must be at least 2");
  if (k < 0 || k > g - 1) throw PreconditionError("euler_closed_form: k must lie in [0, g-1]");
  Integer four_power;
  mpz_ui_pow_ui(four_power.get_mpz_t(), 4, static_cast<unsigned long>(k + 1));
  return binomial(g, k + 1) * four_power;
}

Integer euler_closed_form(const EvenFanoParams& params) {
  return euler_closed_form(params.g(), params.k());
}

}  // namespace fanohodge
