#include "mdsym/moonshine.hpp"

#include <stdexcept>

#include "mdsym/arith.hpp"
#include "mdsym/classical.hpp"
#include "mdsym/dedekind_sum.hpp"
#include "mdsym/phase.hpp"

namespace mdsym {

Rat dedekind_symbol_plus_congruence(const Int& n, const ScaledMat& m) {
  if (!is_squarefree(n))
    throw std::invalid_argument("dedekind_symbol_plus_congruence: N must be squarefree");
  if (!in_gamma0(m, n))
    throw std::invalid_argument("dedekind_symbol_plus_congruence: matrix not in Gamma_0(N)");
  const ArithData ar = arith(n);
  Rat sum(0);
  for (const Int& v : ar.divisors) {
    ScaledMat gv(m.a(), m.b() * v, m.c() / v, m.d());
    sum += dedekind_symbol_sl2z(gv);
  }
  return sum / Rat(pow_int(Int(2), ar.prime_factors));
}

Rat dedekind_symbol_plus(const Int& n, const ScaledMat& m) {
  if (!in_gamma0_plus(m, n))
    throw std::invalid_argument("dedekind_symbol_plus: matrix not in Gamma_0(N)^+");
  if (m.e() == 1) return dedekind_symbol_plus_congruence(n, m);
  const ScaledMat sq = m * m;
  if (sq.e() != 1) throw std::logic_error("dedekind_symbol_plus: square did not land in Gamma_0(N)");
  return (dedekind_symbol_plus_congruence(n, sq) - Rat(omega_petersson(m, m))) / Rat(2);
}

Rat dedekind_symbol_plus_prime(const Int& p, const ScaledMat& m) {
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("dedekind_symbol_plus_prime: p must be prime");
  if (!in_gamma0_plus(m, p))
    throw std::invalid_argument("dedekind_symbol_plus_prime: matrix not in Gamma_0(p)^+");
  if (m.e() == 1) {
    // v = 1: matrix is (a, b; cp, d) with C = cp.
    const Int &a = m.a(), &b = m.b(), &C = m.c(), &d = m.d();
    if (sgn(C) != 0) {
      return Rat((a + d) * (p + 1), 24 * C) - Rat(sgn(C), 4) -
             Rat(sgn(C), 2) * (dedekind_sum(d, abs(C) / p) + dedekind_sum(d, abs(C)));
    }
    return Rat(b * (p + 1), 24 * d) + Rat(sgn(d) - 1, 4);
  }
  if (m.e() != p) throw std::invalid_argument("dedekind_symbol_plus_prime: malformed shape");
  // v = p: matrix is (a sqrt(p), b/sqrt(p); c p/sqrt(p), d sqrt(p)).
  const Int a = m.a() / p, b = m.b(), c = m.c() / p, d = m.d() / p;
  if (sgn(d) == 0) {
    if (sgn(c) > 0) return Rat(a * (p + 1), 24 * c) - Rat(1, 4);
    return Rat(a * (p + 1), 24 * c) + Rat(1, 4);
  }
  Rat base = Rat((b - c) * (p + 1), 24 * d * p) + Rat(sgn(d), 4) +
             Rat(sgn(d), 2) * (dedekind_sum(c, abs(d)) + dedekind_sum(c, abs(d * p)));
  if (sgn(d) < 0 && sgn(c) < 0) return base + Rat(3, 4);
  return base - Rat(1, 4);
}

Int ell_invariant(const Int& n) {
  const ArithData ar = arith(n);
  if (!ar.squarefree) throw std::invalid_argument("ell_invariant: N must be squarefree");
  const int r = ar.prime_factors;
  const Int q = 24 / gcd(Int(24), ar.sigma1);
  // 2^{1-r} lcm(4, 2^{r-1} q); for N = 1 this reads 2 lcm(4, q/2) = 24.
  const Int inner = (r == 0) ? Int(q / 2) : Int(pow_int(Int(2), r - 1) * q);
  Int l;
  mpz_lcm(l.get_mpz_t(), Int(4).get_mpz_t(), inner.get_mpz_t());
  Rat val = (r == 0) ? Rat(2 * l) : Rat(l, pow_int(Int(2), r - 1));
  if (!val.is_integer()) throw std::logic_error("ell_invariant: non-integral value");
  return val.num();
}

}  // namespace mdsym
