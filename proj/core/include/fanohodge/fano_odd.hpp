#pragma once

#include "fanohodge/hodge_diamond.hpp"
#include "fanohodge/integer.hpp"
#include "fanohodge/laurent_poly.hpp"

namespace fanohodge {

/// Fano scheme of k-planes on a smooth intersection of two quadrics in
/// P^{2g+1} (the hyperelliptic case), 0 <= k <= g - 2.
class OddFanoParams {
 public:
  /// Throws PreconditionError unless g >= 2 and 0 <= k <= g - 2.
  OddFanoParams(int g, int k);

  int g() const { return g_; }
  int k() const { return k_; }
  /// (k + 1)(2g - 2k - 1)
  int dimension() const { return (k_ + 1) * (2 * g_ - 2 * k_ - 1); }

 private:
  int g_;
  int k_;
};

/// The Laurent polynomial whose q^c coefficient is N(a, b; c):
///   q^{-(b-a+1)(2a-1)} (1 - q^{4b}) prod_{l=b-a+2}^{a+b-2} (1 - q^{2l})
///                                  / prod_{l=1}^{2a-2} (1 - q^{2l}),
/// obtained by exact division. Requires a >= 2 and b >= a - 1. Cached.
const LaurentPoly& cvx_kernel(int a, int b);

/// Coefficient of q^c in cvx_kernel(a, b).
Integer cvx_multiplicity(int a, int b, int c);

/// Hodge diamond assembled from twisted exterior powers of H^1 of the
/// associated hyperelliptic curve: degree m receives, for each j in
/// [g-k-1, g], N(g-k, j; d-m) copies of wedge^{g-j} H^1(C) Tate-twisted by
/// t = (m - (g-j)) / 2. A non-integral or negative twist throws
/// ConsistencyError.
HodgeDiamond fano_odd_diamond(const OddFanoParams& params);

}  // namespace fanohodge
