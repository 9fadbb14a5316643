#pragma once

#include <random>

#include "mdsym/arith.hpp"
#include "mdsym/congruence.hpp"
#include "mdsym/matrix.hpp"
#include "mdsym/words.hpp"

namespace mdsym::testing {

using Rng = std::mt19937_64;

/// Random SL(2,Z) element as a product of T^q S factors, optional sign flip.
inline ScaledMat random_sl2z(Rng& rng, int factors = 4, int qmax = 6) {
  std::uniform_int_distribution<int> qd(-qmax, qmax);
  std::uniform_int_distribution<int> flip(0, 1);
  ScaledMat m;
  for (int i = 0; i < factors; ++i) m = m * mat_T_pow(qd(rng)) * mat_S();
  m = m * mat_T_pow(qd(rng));
  if (flip(rng)) m = -m;
  return m;
}

/// Random SL(2,Z) element with entries up to roughly `bound`.
inline ScaledMat random_sl2z_large(Rng& rng, const Int& bound) {
  std::uniform_int_distribution<long> qd(-9, 9);
  std::uniform_int_distribution<int> flip(0, 1);
  ScaledMat m;
  while (abs(m.a()) < bound && abs(m.c()) < bound) {
    long q = qd(rng);
    if (q == 0) q = 1;
    m = m * mat_T_pow(q) * mat_S();
  }
  if (flip(rng)) m = -m;
  return m;
}

/// Random element of Gamma_0(N): alternating word in T^q and (1 0; Nq 1),
/// with an occasional global sign flip.
inline ScaledMat random_gamma0(Rng& rng, const Int& n, int len = 6, int qmax = 4) {
  std::uniform_int_distribution<int> qd(-qmax, qmax);
  std::uniform_int_distribution<int> flip(0, 3);
  ScaledMat m;
  for (int i = 0; i < len; ++i) {
    const int q = qd(rng);
    if (q == 0) continue;
    if (i % 2 == 0)
      m = m * mat_T_pow(q);
    else
      m = m * ScaledMat(1, 0, n * q, 1);
  }
  if (flip(rng) == 0) m = -m;
  return m;
}

/// Random element of Gamma_0(N)^+ (squarefree N): a Gamma_0(N) element times
/// a random Atkin-Lehner matrix m_v.
inline ScaledMat random_gamma0_plus(Rng& rng, const Int& n, int len = 6, int qmax = 4) {
  const ArithData ar = arith(n);
  std::uniform_int_distribution<size_t> pick(0, ar.divisors.size() - 1);
  const Int v = ar.divisors[pick(rng)];
  return random_gamma0(rng, n, len, qmax) * atkin_lehner_matrix(n, v);
}

}  // namespace mdsym::testing
