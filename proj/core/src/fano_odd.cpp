#include "fanohodge/fano_odd.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "fanohodge/binomial.hpp"
#include "fanohodge/errors.hpp"

namespace fanohodge {

OddFanoParams::OddFanoParams(int g, int k) : g_(g), k_(k) {
  if (g < 2) throw PreconditionError("OddFanoParams: g must be at least 2");
  if (k < 0 || k > g - 2) throw PreconditionError("OddFanoParams: k must lie in [0, g-2]");
}

namespace {

// 1 - q^e
LaurentPoly one_minus_power(int e) { return LaurentPoly{{0, Integer(1)}, {e, Integer(-1)}}; }

LaurentPoly compute_kernel(int a, int b) {
  LaurentPoly numerator = one_minus_power(4 * b);
  for (int l = b - a + 2; l <= a + b - 2; ++l) numerator *= one_minus_power(2 * l);
  LaurentPoly denominator(1);
  for (int l = 1; l <= 2 * a - 2; ++l) denominator *= one_minus_power(2 * l);
  return exact_divide(numerator, denominator).shifted(-(b - a + 1) * (2 * a - 1));
}

std::shared_mutex kernel_mutex;
std::map<std::pair<int, int>, LaurentPoly> kernel_cache;

}  // namespace

const LaurentPoly& cvx_kernel(int a, int b) {
  if (a < 2 || b < a - 1) {
    throw PreconditionError("cvx_kernel: requires a >= 2 and b >= a - 1, got a=" + std::to_string(a) +
                            ", b=" + std::to_string(b));
  }
  {
    std::shared_lock lock(kernel_mutex);
    auto it = kernel_cache.find({a, b});
    if (it != kernel_cache.end()) return it->second;
  }
  LaurentPoly kernel = compute_kernel(a, b);
  std::unique_lock lock(kernel_mutex);
  return kernel_cache.try_emplace({a, b}, std::move(kernel)).first->second;
}

Integer cvx_multiplicity(int a, int b, int c) { return cvx_kernel(a, b).coefficient(c); }

HodgeDiamond fano_odd_diamond(const OddFanoParams& params) {
  const int g = params.g();
  const int k = params.k();
  const int d = params.dimension();

  std::vector<std::vector<Integer>> h(static_cast<std::size_t>(d + 1),
                                      std::vector<Integer>(static_cast<std::size_t>(d + 1)));
  for (int m = 0; m <= 2 * d; ++m) {
    for (int j = g - k - 1; j <= g; ++j) {
      const Integer mult = cvx_multiplicity(g - k, j, d - m);
      if (mult == 0) continue;
      const int weight = g - j;  // wedge^{g-j} H^1 has weight g - j
      if (m < weight || (m - weight) % 2 != 0) {
        throw ConsistencyError("fano_odd_diamond: degree " + std::to_string(m) +
                               " cannot carry wedge^" + std::to_string(weight) + " H^1 (g=" +
                               std::to_string(g) + ", k=" + std::to_string(k) + ")");
      }
      const int twist = (m - weight) / 2;
      for (int p = std::max(0, m - d); p <= std::min(m, d); ++p) {
        const int q = m - p;
        const Integer contribution = mult * binomial(g, p - twist) * binomial(g, q - twist);
        h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] += contribution;
      }
    }
  }
  return HodgeDiamond(d, std::move(h));
}

}  // namespace fanohodge
