#pragma once

#include "fanohodge/integer.hpp"
#include "fanohodge/laurent_poly.hpp"
#include "fanohodge/motivic_expression.hpp"
#include "fanohodge/report.hpp"

namespace fanohodge {

// Multiplicity of [Sym^i C] in the conjectural decomposition of the class of
// the Fano scheme F_k in the hyperelliptic case:
//
//   M = L^{i(g-k-1)} ( [2g-k-i, k+1-i]
//         - (L^{g-k-1} + L^{g+2k-3i}) [n, k-i]
//         - (L^{g-k} + L^{g-i} + L^{g+k-2i} + L^{3g-3k-4} + L^{3g-2k-4-i}
//            + L^{3g-k-2i-4}) [n, k-i-1]
//         - (L^{3(g-k-1)} + L^{3(g-k-1)+1} + L^{3g-2k-i-3} + L^{3g-2k-i-2}) [n, k-i-2]
//         - L^{4(g-k)-2} [n, k-i-3] ),      n = 2g-k-i-4,
//
// with [a, b] the Gaussian binomial in L. Requires g >= 2, 0 <= k <= g-2,
// 0 <= i <= k+1 (PreconditionError otherwise).
LaurentPoly m_polynomial(int g, int k, int i);

// Closed form of m_polynomial at L = 1:
//   binom(2g-4-k-i, k+1-i) + 2 binom(2g-4-k-i, k-i).
Integer m_at_one(int g, int k, int i);

// Multiplicities of the known k = g-2 decomposition: L^{g-1} for i = g-1,
// otherwise L^i + L^{3g-3-2i}. Requires g >= 2, 0 <= i <= g-1.
LaurentPoly bgmn_multiplicity(int g, int i);

// sum_{i=0}^{k+1} M_{g,k,i} [Sym^i C]
MotivicExpression conjecture_b_expression(int g, int k);

// E(F_k) against the image of conjecture_b_expression, plus effectivity of
// every M_{g,k,i}. Also records whether each M_{g,k,i} satisfies
// L^{d-i} M(1/L) = M(L) in lefschetz_symmetric.
VerificationReport verify_conjecture_b(int g, int k);

// E(F_0) = E(P^{2g-1}) - L^{g-1} E(P^1) + L^{g-1} E(C) with L = xy.
VerificationReport verify_lemma_k0(int g);

// m_polynomial(g, g-2, i) = bgmn_multiplicity(g, i) for 0 <= i <= g-1.
VerificationReport verify_bgmn_crosscheck(int g);

// HH(F_k) = sum_i m_at_one(g, k, i) HH(Sym^i C).
VerificationReport verify_hochschild(int g, int k);

}  // namespace fanohodge
