#include "fanohodge/stacky_counts.hpp"

#include <string>
#include <vector>

#include "fanohodge/binomial.hpp"
#include "fanohodge/errors.hpp"
#include "fanohodge/fano_even.hpp"
#include "fanohodge/hodge_diamond.hpp"

namespace fanohodge {

namespace {

void require_even_a(int m, int a, const char* who) {
  if (m < 0) throw PreconditionError(std::string(who) + ": m must be non-negative");
  if (a < 0 || a % 2 != 0) throw PreconditionError(std::string(who) + ": a must be even and non-negative");
}

Integer gessel_lhs(int m, int a) {
  Integer four_power;
  mpz_ui_pow_ui(four_power.get_mpz_t(), 4, static_cast<unsigned long>(m));
  return four_power * binomial(m + a / 2, m);
}

Integer gessel_rhs(int m, int a) {
  Integer sum = 0;
  for (int i = 0; i <= m; ++i) sum += binomial(m + a - i, a) * binomial(2 * m + a + 1, i);
  return sum;
}

}  // namespace

Integer fonarev_rank(int g, int k) {
  if (g < 2) throw PreconditionError("fonarev_rank: g must be at least 2");
  if (k < 0) throw PreconditionError("fonarev_rank: k must be non-negative");
  Integer sum = 0;
  for (int t = 0; t <= k; ++t) sum += (k + 1 - t) * binomial(2 * g + 1, t);
  return sum;
}

Integer stacky_rhs_length(int g, int k) {
  if (g < 2) throw PreconditionError("stacky_rhs_length: g must be at least 2");
  if (k < 0 || k > g - 2) throw PreconditionError("stacky_rhs_length: k must lie in [0, g-2]");
  Integer sum = 0;
  for (int i = 0; i <= k + 1; ++i) sum += binomial(2 * g - 3 - k - i, k + 1 - i) * fonarev_rank(g, i);
  return sum;
}

bool gessel_identity_check(int m, int a) {
  require_even_a(m, a, "gessel_identity_check");
  return gessel_lhs(m, a) == gessel_rhs(m, a);
}

bool gessel_series_check(int m, int a) {
  require_even_a(m, a, "gessel_series_check");
  const auto order = static_cast<std::size_t>(m);
  // 1 / (1 - 4x), truncated after x^m
  std::vector<Integer> geometric(order + 1);
  geometric[0] = 1;
  for (std::size_t i = 1; i <= order; ++i) geometric[i] = 4 * geometric[i - 1];

  std::vector<Integer> series(order + 1);
  series[0] = 1;
  for (int factor = 0; factor < a / 2 + 1; ++factor) {
    std::vector<Integer> next(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
      for (std::size_t j = 0; i + j <= order; ++j) next[i + j] += series[i] * geometric[j];
    }
    series = std::move(next);
  }
  return series[order] == gessel_lhs(m, a) && series[order] == gessel_rhs(m, a);
}

bool chu_vandermonde_check(int n, int j, int k) {
  if (j < 0 || j > k || k > n) {
    throw PreconditionError("chu_vandermonde_check: requires 0 <= j <= k <= n");
  }
  Integer sum = 0;
  for (int m = 0; m <= n; ++m) sum += binomial(m, j) * binomial(n - m, k - j);
  return sum == binomial(n + 1, k + 1);
}

VerificationReport verify_euler_even(int g, int k) {
  return timed([&] {
    const EvenFanoParams params(g, k);
    return VerificationReport{
        .identity = "euler-even",
        .params = {{"g", g}, {"k", k}},
        .lhs = euler(fano_even_diamond(params)),
        .rhs = euler_closed_form(params),
    };
  });
}

VerificationReport verify_stacky_length(int g, int k) {
  return timed([&] {
    return VerificationReport{
        .identity = "stacky-length",
        .params = {{"g", g}, {"k", k}},
        .lhs = stacky_rhs_length(g, k),
        .rhs = euler_closed_form(g, k),
    };
  });
}

}  // namespace fanohodge
