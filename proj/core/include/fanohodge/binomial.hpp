#pragma once

#include "fanohodge/integer.hpp"
#include "fanohodge/laurent_poly.hpp"

namespace fanohodge {

// Ordinary binomial coefficient with the conventions
//   m < 0 -> 0,  m == 0 -> 1 (any n, including n < 0),  0 <= n < m -> 0.
// n < 0 with m >= 1 throws DomainError.
Integer binomial(long n, long m);

// Gaussian binomial [n, m]_q, built with the Pascal recurrence
//   [n, m] = [n-1, m-1] + q^m [n-1, m]
// and memoized per (n, m). Same edge conventions as binomial().
// The cache is shared between threads.
const LaurentPoly& gauss_binomial(int n, int m);

}  // namespace fanohodge
