#pragma once

#include "fanohodge/integer.hpp"
#include "fanohodge/report.hpp"

namespace fanohodge {

/// Rank of K_0 of the stacky symmetric power of order k:
///   sum_{t=0}^{k} (k+1-t) binom(2g+1, t).
Integer fonarev_rank(int g, int k);

/// Number of exceptional objects on the right-hand side of the stacky
/// decomposition: sum_{i=0}^{k+1} binom(2g-3-k-i, k+1-i) fonarev_rank(g, i).
Integer stacky_rhs_length(int g, int k);

/// 4^m binom(m + a/2, m) == sum_{i=0}^{m} binom(m+a-i, a) binom(2m+a+1, i),
/// evaluated exactly. Requires m >= 0 and a >= 0 even.
bool gessel_identity_check(int m, int a);

/// Second route for the same identity: the x^m coefficient of
/// (1 - 4x)^{-(a/2+1)}, computed by truncated power-series multiplication,
/// against both sides of gessel_identity_check.
bool gessel_series_check(int m, int a);

/// sum_{m=0}^{n} binom(m, j) binom(n-m, k-j) == binom(n+1, k+1) for
/// 0 <= j <= k <= n.
bool chu_vandermonde_check(int n, int j, int k);

/// euler(fano_even_diamond(g, k)) against euler_closed_form(g, k).
VerificationReport verify_euler_even(int g, int k);

/// stacky_rhs_length(g, k) against euler_closed_form(g, k).
VerificationReport verify_stacky_length(int g, int k);

}  // namespace fanohodge
