#include "mdsym/classical.hpp"

#include <stdexcept>

#include "mdsym/dedekind_sum.hpp"
#include "mdsym/phase.hpp"

namespace mdsym {

Rat dedekind_symbol_sl2z(const ScaledMat& m) {
  if (m.e() != 1) throw std::invalid_argument("dedekind_symbol_sl2z: matrix not in SL(2,Z)");
  const Int &a = m.a(), &b = m.b(), &c = m.c(), &d = m.d();
  if (sgn(c) != 0) {
    Rat s = dedekind_sum(d, abs(c));
    return Rat(a + d, 12 * c) - Rat(sgn(c)) * (Rat(1, 4) + s);
  }
  return Rat(b, 12 * d) + Rat(sgn(d) - 1, 4);
}

int rademacher_R(const ScaledMat& m) {
  if (m.e() != 1) throw std::invalid_argument("rademacher_R: matrix not in SL(2,Z)");
  return sgn(m.c()) != 0 ? sgn(m.c()) : sgn(m.d()) - 1;
}

Int rademacher_Phi(const ScaledMat& m) {
  if (m.e() != 1) throw std::invalid_argument("rademacher_Phi: matrix not in SL(2,Z)");
  Rat phi;
  if (sgn(m.c()) != 0)
    phi = Rat(m.a() + m.d(), m.c()) - Rat(12 * sgn(m.c())) * dedekind_sum(m.d(), abs(m.c()));
  else
    phi = Rat(m.b(), m.d());
  if (!phi.is_integer()) throw std::logic_error("rademacher_Phi: non-integral value");
  return phi.num();
}

Int rademacher_Psi(const ScaledMat& m) {
  return rademacher_Phi(m) - 3 * sgn(m.c() * (m.a() + m.d()));
}

RootOfUnity::RootOfUnity(const Rat& exponent) {
  Rat r = exponent - Rat(2) * ((exponent / Rat(2)).floor());  // reduce mod 2, into [0,2)
  num_ = r.num();
  den_ = r.den();
}

std::complex<double> RootOfUnity::to_complex() const {
  double t = 3.14159265358979323846 * num_.get_d() / den_.get_d();
  return {std::cos(t), std::sin(t)};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  return RootOfUnity(Rat(num_, den_) + Rat(o.num_, o.den_));
}

std::string RootOfUnity::str() const {
  if (num_ == 0) return "1";
  return "exp(pi*i*" + Rat(num_, den_).str() + ")";
}

RootOfUnity eta_multiplier(const ScaledMat& m) {
  return RootOfUnity(dedekind_symbol_sl2z(m));
}

}  // namespace mdsym
