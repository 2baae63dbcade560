#pragma once

#include "fanohodge/report.hpp"

namespace fanohodge {

// Range sweeps over the counting identities. Each returns one report with
// lhs = number of instances checked and rhs = number that held; the first few
// failing instances are listed in notes.

/// gessel_identity_check for 0 <= m <= max_m, even 0 <= a <= max_a.
VerificationReport gessel_suite(int max_m, int max_a);

/// gessel_series_check over the same range.
VerificationReport gessel_series_suite(int max_m, int max_a);

/// chu_vandermonde_check for 0 <= j <= k <= n <= max_n.
VerificationReport chu_vandermonde_suite(int max_n);

/// eval_at_one(m_polynomial(g,k,i)) == m_at_one(g,k,i) for 2 <= g <= max_g.
VerificationReport multiplicity_at_one_suite(int max_g);

/// For 0 <= m <= n <= max_n: [n,m]_q = [n,n-m]_q, value binom(n,m) at q = 1,
/// degree m(n-m), non-negative palindromic coefficients.
VerificationReport q_binomial_suite(int max_n);

}  // namespace fanohodge
