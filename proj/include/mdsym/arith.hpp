#pragma once

#include <vector>

#include "mdsym/rational.hpp"

namespace mdsym {

/// Multiplicative data attached to a level N: divisors, Moebius values,
/// sigma_1, the products alpha_N and beta_N, the index psi(N) and the
/// hyperbolic volumes of Gamma_0(N) and (for squarefree N) Gamma_0(N)^+,
/// both stored as the coefficient of pi.
struct ArithData {
  Int n;
  std::vector<Int> divisors;   // ascending
  std::vector<int> mobius;     // aligned with divisors
  Int sigma1;                  // sum of divisors of N
  Rat alpha;                   // prod_{p|N} 1/(1 - 1/p)
  Rat beta;                    // prod_{p|N} (1 - p^-2)/(1 - p^-1)
  Int psi;                     // [SL(2,Z) : Gamma_0(N)] = N prod (1 + 1/p)
  int prime_factors = 0;       // r = number of distinct primes
  bool squarefree = false;
  Rat vol_gamma0;              // vol(Gamma_0(N)) / pi = psi/3
  Rat vol_gamma0_plus;         // vol(Gamma_0(N)^+) / pi = psi/(3*2^r), squarefree N only

  int mobius_of(const Int& d) const;
};

ArithData arith(const Int& n);  // throws for n <= 0

int mobius(const Int& n);
Int sigma1_of(const Int& n);

/// Signature data of a Fuchsian group: genus, cusp count, elliptic orders and
/// volume (coefficient of pi). Gauss-Bonnet ties them together.
struct GroupData {
  int genus = 0;
  int cusps = 0;
  std::vector<int> elliptic_orders;
  Rat volume_over_pi;

  /// volume/(2 pi) == 2g - 2 + c + sum_j (1 - 1/m_j), exactly.
  bool gauss_bonnet_ok() const;
};

Int binomial(unsigned long n, unsigned long k);

/// sum_{j=0}^{n} (2j+1) C(2j,j) C(2(n-j),n-j) == (n+1) 4^n, in exact integers.
bool central_binomial_check(int n);

}  // namespace mdsym
