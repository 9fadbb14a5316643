#include "mdsym/dedekind_sum.hpp"

#include <stdexcept>

namespace mdsym {

Rat sawtooth(const Rat& x) {
  if (x.is_integer()) return Rat(0);
  return x.frac() - Rat(1, 2);
}

namespace {

void check_args(const Int& h, const Int& k) {
  if (sgn(k) <= 0) throw std::invalid_argument("dedekind_sum: k must be >= 1");
  if (gcd(abs(h), k) != 1) throw std::invalid_argument("dedekind_sum: gcd(h,k) must be 1");
}

}  // namespace

Rat dedekind_sum_naive(const Int& h, const Int& k) {
  check_args(h, k);
  // For 0 < x < k, ((x/k)) = (2x - k)/(2k); integer arguments contribute 0.
  // Accumulate sum_m (2(hm mod k) - k)(2m - k) over the common denominator 4k^2.
  if (k.fits_slong_p() && k.get_si() <= (1L << 20)) {
    const long kk = k.get_si();
    const long hh = mpz_fdiv_ui(h.get_mpz_t(), static_cast<unsigned long>(kk));
    long long acc = 0;
    long hm = 0;
    for (long m = 1; m < kk; ++m) {
      hm += hh;
      if (hm >= kk) hm -= kk;
      if (hm == 0) continue;
      acc += static_cast<long long>(2 * hm - kk) * (2 * m - kk);
    }
    return Rat(Int(static_cast<long>(acc)), 4 * k * k);
  }
  Int acc(0);
  Int hm(0);
  const Int hred = fmod(h, k);
  for (Int m(1); m < k; ++m) {
    hm += hred;
    if (hm >= k) hm -= k;
    if (hm == 0) continue;
    acc += (2 * hm - k) * (2 * m - k);
  }
  return Rat(acc, 4 * k * k);
}

namespace {

Rat dedekind_sum_impl(const Int& h_in, const Int& k_in, int* steps) {
  check_args(h_in, k_in);
  // s(h,k) = -1/4 + (h^2 + k^2 + 1)/(12hk) - s(k mod h, h), descending until
  // h = 0 (then k = 1 and s(0,1) = 0). Negative h reduces into [0,k) first.
  Int h = fmod(h_in, k_in);
  Int k = k_in;
  Rat acc(0);
  int sign = 1;
  int n = 0;
  while (sgn(h) != 0) {
    Rat term = Rat(-1, 4) + Rat(h * h + k * k + 1, 12 * h * k);
    acc += sign > 0 ? term : -term;
    Int t = fmod(k, h);
    k = h;
    h = t;
    sign = -sign;
    ++n;
  }
  if (steps) *steps = n;
  return acc;
}

}  // namespace

Rat dedekind_sum(const Int& h, const Int& k) { return dedekind_sum_impl(h, k, nullptr); }

int dedekind_sum_steps(const Int& h, const Int& k) {
  int n = 0;
  dedekind_sum_impl(h, k, &n);
  return n;
}

}  // namespace mdsym
