#pragma once

#include <complex>

#include "mdsym/matrix.hpp"
#include "mdsym/rational.hpp"

namespace mdsym {

/// Modular Dedekind symbol S on SL(2,Z):
///   S = (a+d)/(12c) - sgn(c)(1/4 + s(d,|c|))   for c != 0,
///   S = b/(12d) + (sgn(d)-1)/4                 for c == 0.
/// Throws if m has scale e != 1.
Rat dedekind_symbol_sl2z(const ScaledMat& m);

/// Rademacher's R: sgn(c) for c != 0, else sgn(d) - 1.
int rademacher_R(const ScaledMat& m);

/// Rademacher's Phi; always an integer, unchanged under m -> -m, and
/// Phi(mn) = Phi(m) + Phi(n) - 3 sgn(c_m c_n c_mn) when all three c's are
/// nonzero. Equals 12(S + R/4) + 12 rho.
Int rademacher_Phi(const ScaledMat& m);

/// Psi = Phi - 3 sgn(c(a+d)).
Int rademacher_Psi(const ScaledMat& m);

/// exp(pi*i*num/den) as an exact fraction, num reduced mod 2*den.
class RootOfUnity {
 public:
  /// Represents exp(pi*i*exponent).
  explicit RootOfUnity(const Rat& exponent);
  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  std::complex<double> to_complex() const;
  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  RootOfUnity operator*(const RootOfUnity& o) const;
  std::string str() const;  // "exp(pi*i*num/den)"

 private:
  Int num_;  // in [0, 2*den), gcd-reduced against den
  Int den_;  // >= 1
};

/// The eta multiplier exp(pi*i*S(m)); a 24th root of unity on SL(2,Z).
RootOfUnity eta_multiplier(const ScaledMat& m);

}  // namespace mdsym
