#pragma once

#include "mdsym/matrix.hpp"

namespace mdsym {

/// Branch marker: 1 iff c = 0 and d < 0.
int rho(const ScaledMat& m);

/// Phase factor omega(M,N) in {-1,0,1} via Petersson's five-case formula.
/// Signs are taken on the integer entries; the positive scale never flips them.
int omega_petersson(const ScaledMat& m, const ScaledMat& n);

/// Same value via the sign-triple table on (sgn c_M, sgn c_N, sgn c_MN).
int omega_cases(const ScaledMat& m, const ScaledMat& n);

/// omega(M,M) from the sign of c and the trace alone.
int omega_self(const ScaledMat& m);

}  // namespace mdsym
