#pragma once

#include "fanohodge/hodge_diamond.hpp"

namespace fanohodge {

/// Smooth projective curve of genus g.
HodgeDiamond curve_diamond(int g);

/// Sym^n C for C of genus g. E(Sym^n C) is the t^n coefficient of
///   (1 - x t)^g (1 - y t)^g / ((1 - t)(1 - x y t)),
/// expanded as a truncated series; h^{p,q} is recovered by undoing the sign
/// (-1)^{p+q}. A negative result throws ConsistencyError.
HodgeDiamond sym_curve_diamond(int g, int n);

/// Jacobian of a genus-g curve: h^{p,q} = binom(g, p) binom(g, q).
HodgeDiamond jacobian_diamond(int g);

HodgeDiamond projective_space_diamond(int n);

}  // namespace fanohodge
