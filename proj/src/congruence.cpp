#include "mdsym/congruence.hpp"

#include <stdexcept>

#include "mdsym/arith.hpp"
#include "mdsym/dedekind_sum.hpp"
#include "mdsym/phase.hpp"

namespace mdsym {

Rat dedekind_symbol_gamma0(const Int& n, const ScaledMat& m) {
  if (!in_gamma0(m, n)) throw std::invalid_argument("dedekind_symbol_gamma0: matrix not in Gamma_0(N)");
  const ArithData ar = arith(n);
  const Int &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
  if (sgn(c) == 0) return Rat(n * b, 12 * d) * ar.beta + Rat(sgn(d) - 1, 4);
  const Int cabs = abs(c);
  Rat sum(0);
  for (size_t i = 0; i < ar.divisors.size(); ++i) {
    if (ar.mobius[i] == 0) continue;
    const Int& v = ar.divisors[i];
    sum += Rat(ar.mobius[i], v) * dedekind_sum(d, v * cabs / n);
  }
  return Rat(n * (a + d), 12 * c) * ar.beta - Rat(sgn(c), 4) - Rat(sgn(c)) * ar.alpha * sum;
}

ScaledMat iota(const ScaledMat& m) { return ScaledMat(m.a(), -m.b(), -m.c(), m.d(), m.e()); }

ScaledMat tau_matrix(const Int& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("tau_matrix: N must be positive");
  return ScaledMat(0, -1, n, 0, n);
}

ScaledMat fricke(const Int& n, const ScaledMat& m) {
  if (!in_gamma0(m, n)) throw std::invalid_argument("fricke: matrix not in Gamma_0(N)");
  return ScaledMat(m.d(), -(m.c() / n), -(m.b() * n), m.a());
}

Rat dedekind_symbol_gamma0_cusp0(const Int& n, const ScaledMat& m) {
  const ScaledMat w = fricke(n, m);
  const ScaledMat tau_inv = tau_matrix(n).inverse();
  return dedekind_symbol_gamma0(n, w) + Rat(omega_petersson(tau_inv, w)) -
         Rat(omega_petersson(m, tau_inv));
}

Rat symbol_at_cusp(const Rat& s_infinity, const ScaledMat& m, const ScaledMat& sigma) {
  const ScaledMat sigma_inv = sigma.inverse();
  const ScaledMat m_b = sigma_inv * m * sigma;
  return s_infinity + Rat(omega_petersson(sigma_inv, m)) - Rat(omega_petersson(m_b, sigma_inv));
}

Rat symbol_parabolic(const Rat& volume_over_pi, bool same_cusp, const Int& h) {
  if (!same_cusp) return Rat(0);
  return volume_over_pi * Rat(h, 4);
}

Rat symbol_elliptic(const ScaledMat& elliptic, int order) {
  if (order <= 0) throw std::invalid_argument("symbol_elliptic: order must be positive");
  Int omega_sum(0);
  ScaledMat power = elliptic;
  for (int k = 1; k < order; ++k) {
    omega_sum += omega_petersson(power, elliptic);
    power = power * elliptic;
  }
  if (!power.is_identity()) throw std::invalid_argument("symbol_elliptic: E^r != I");
  return Rat(-omega_sum, order);
}

ScaledMat atkin_lehner_matrix(const Int& n, const Int& v) {
  if (sgn(n) <= 0 || sgn(v) <= 0 || !divides(v, n))
    throw std::invalid_argument("atkin_lehner_matrix: v must divide N");
  const Int v1 = n / v;
  if (gcd(v, v1) != 1) throw std::invalid_argument("atkin_lehner_matrix: gcd(v, N/v) must be 1");
  if (v == 1) return ScaledMat();
  if (v == n) return tau_matrix(n);
  // Smallest non-negative b with a solution of a d v^2 - N c b = v. b = 1
  // always works: pick the least c >= 1 with (N/v) c = -1 mod v; then
  // N c = -v mod v^2, so a = 1, d = (v + N c)/v^2 is an integer.
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), v1.get_mpz_t(), v.get_mpz_t()) == 0)
    throw std::logic_error("atkin_lehner_matrix: N/v not invertible mod v");
  const Int c = fmod(-inv, v);
  const Int d = (v + n * c) / (v * v);
  return ScaledMat(v, 1, n * c, d * v, v);
}

ScaledMat cusp_scaling(const Int& n, const Int& v) {
  if (sgn(n) <= 0 || sgn(v) <= 0 || !divides(v, n))
    throw std::invalid_argument("cusp_scaling: v must divide N");
  const Int v1 = n / v;
  if (gcd(v, v1) != 1) throw std::invalid_argument("cusp_scaling: gcd(v, N/v) must be 1");
  // v1 d - v b = 1 with the smallest non-negative b.
  Int g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v1.get_mpz_t(), v.get_mpz_t());
  // s*v1 + t*v = 1  ->  d = s, b = -t; shift b into [0, v1).
  Int d = s;
  Int b = -t;
  Int shift = fdiv(b, v1);
  b -= shift * v1;
  d -= shift * v;
  return ScaledMat(v1, b, n, d * v1, v1);
}

}  // namespace mdsym
