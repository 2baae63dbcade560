#pragma once

#include "fanohodge/hodge_diamond.hpp"
#include "fanohodge/integer.hpp"

namespace fanohodge {

/// Fano scheme of k-planes on a smooth intersection of two quadrics in
/// P^{2g} (the stacky case), 0 <= k <= g - 2.
class EvenFanoParams {
 public:
  EvenFanoParams(int g, int k);

  int g() const { return g_; }
  int k() const { return k_; }
  /// (k + 1)(2g - 2k - 2)
  int dimension() const { return (k_ + 1) * (2 * g_ - 2 * k_ - 2); }

 private:
  int g_;
  int k_;
};

/// b_{2p} = sum_{j=0}^{k+1} binom(2g+1, j) [q^{p - j(g-k-1)}] [2g-k-j-1, k+1-j]_q.
/// Zero for p outside [0, d].
Integer fano_even_betti(const EvenFanoParams& params, int p);

/// Hodge-Tate diamond with h^{p,p} = b_{2p}.
HodgeDiamond fano_even_diamond(const EvenFanoParams& params);

/// binom(g, k+1) 4^{k+1}. Accepts 0 <= k <= g - 1; at k = g - 1 this is the
/// point count 4^g of the finite Fano scheme.
Integer euler_closed_form(int g, int k);
Integer euler_closed_form(const EvenFanoParams& params);

}  // namespace fanohodge
