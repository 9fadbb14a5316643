#pragma once

#include "mdsym/rational.hpp"

namespace mdsym {

/// Sawtooth ((x)): x - floor(x) - 1/2 for non-integer x, else 0.
Rat sawtooth(const Rat& x);

/// Classical Dedekind sum s(h,k) = sum_{m=0}^{k-1} ((hm/k))((m/k)), evaluated
/// by direct summation. Requires k >= 1 and gcd(h,k) = 1.
Rat dedekind_sum_naive(const Int& h, const Int& k);

/// Same value in O(log k) steps via the reciprocity law (Euclidean descent).
Rat dedekind_sum(const Int& h, const Int& k);

/// Number of reciprocity steps dedekind_sum takes (for complexity checks).
int dedekind_sum_steps(const Int& h, const Int& k);

}  // namespace mdsym
