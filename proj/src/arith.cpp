#include "mdsym/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdsym {

namespace {

std::vector<std::pair<Int, int>> factorize(Int n) {
  std::vector<std::pair<Int, int>> out;
  Int p(2);
  while (p * p <= n) {
    if (divides(p, n)) {
      int k = 0;
      while (divides(p, n)) {
        n /= p;
        ++k;
      }
      out.emplace_back(p, k);
    }
    ++p;
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

int ArithData::mobius_of(const Int& d) const {
  for (size_t i = 0; i < divisors.size(); ++i)
    if (divisors[i] == d) return mobius[i];
  throw std::invalid_argument("mobius_of: not a divisor of N");
}

ArithData arith(const Int& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("arith: N must be positive");
  ArithData out;
  out.n = n;
  auto fac = factorize(n);
  out.prime_factors = static_cast<int>(fac.size());
  out.squarefree = std::all_of(fac.begin(), fac.end(), [](auto& pe) { return pe.second == 1; });

  // Divisors (ascending) with their Moebius values.
  out.divisors = {Int(1)};
  out.mobius = {1};
  for (auto& [p, k] : fac) {
    size_t base = out.divisors.size();
    Int pe(1);
    for (int j = 1; j <= k; ++j) {
      pe *= p;
      for (size_t i = 0; i < base; ++i) {
        out.divisors.push_back(out.divisors[i] * pe);
        out.mobius.push_back(j == 1 ? -out.mobius[i] : 0);
      }
    }
  }
  std::vector<size_t> idx(out.divisors.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](size_t i, size_t j) { return out.divisors[i] < out.divisors[j]; });
  std::vector<Int> dsorted;
  std::vector<int> msorted;
  for (size_t i : idx) {
    dsorted.push_back(out.divisors[i]);
    msorted.push_back(out.mobius[i]);
  }
  out.divisors = std::move(dsorted);
  out.mobius = std::move(msorted);

  out.sigma1 = 0;
  for (auto& d : out.divisors) out.sigma1 += d;

  out.alpha = Rat(1);
  out.beta = Rat(1);
  out.psi = n;
  for (auto& [p, k] : fac) {
    (void)k;
    out.alpha = out.alpha * Rat(p, p - 1);
    out.beta = out.beta * Rat(p + 1, p);
    out.psi = out.psi / p * (p + 1);
  }
  out.vol_gamma0 = Rat(out.psi, Int(3));
  if (out.squarefree)
    out.vol_gamma0_plus = out.vol_gamma0 / Rat(pow_int(Int(2), out.prime_factors));
  return out;
}

int mobius(const Int& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("mobius: N must be positive");
  int m = 1;
  for (auto& [p, k] : factorize(n)) {
    (void)p;
    if (k > 1) return 0;
    m = -m;
  }
  return m;
}

Int sigma1_of(const Int& n) { return arith(n).sigma1; }

bool GroupData::gauss_bonnet_ok() const {
  Rat rhs = Rat(2 * genus - 2 + cusps);
  for (int m : elliptic_orders) rhs += Rat(1) - Rat(1, m);
  return volume_over_pi == Rat(2) * rhs;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool central_binomial_check(int n) {
  if (n < 0) throw std::invalid_argument("central_binomial_check: n must be >= 0");
  Int lhs(0);
  for (int j = 0; j <= n; ++j)
    lhs += Int(2 * j + 1) * binomial(2 * j, j) * binomial(2 * (n - j), n - j);
  Int rhs = Int(n + 1) * pow_int(Int(4), n);
  return lhs == rhs;
}

}  // namespace mdsym
