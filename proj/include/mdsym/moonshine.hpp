#pragma once

#include "mdsym/matrix.hpp"
#include "mdsym/rational.hpp"

namespace mdsym {

/// Symbol S_N^+ on the congruence part of Gamma_0(N)^+ (squarefree N with r
/// prime factors): (1/2^r) sum_{v|N} S(gamma_v) with gamma_v = (a, bv; c/v, d).
/// Requires e = 1 and m in Gamma_0(N).
Rat dedekind_symbol_plus_congruence(const Int& n, const ScaledMat& m);

/// Symbol S_N^+ on all of Gamma_0(N)^+. Scaled elements (e > 1) go through
/// the squaring identity S+(g) = (S+(g^2) - omega(g,g))/2, since g^2 always
/// lands in Gamma_0(N).
Rat dedekind_symbol_plus(const Int& n, const ScaledMat& m);

/// Prime-level closed form (independent route): the explicit case table on
/// the shape (a sqrt(v), b/sqrt(v); c p/sqrt(v), d sqrt(v)), v in {1, p}.
Rat dedekind_symbol_plus_prime(const Int& p, const ScaledMat& m);

/// Reported root-of-unity order for exp(pi*i*S_N^+):
/// 2^{1-r} lcm(4, 2^{r-1} * 24/gcd(24, sigma(N))). Exposed as data only;
/// see the symbol tests for why it is not asserted as an invariant.
Int ell_invariant(const Int& n);

}  // namespace mdsym
