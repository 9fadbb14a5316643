#include "mdsym/higher_order.hpp"

#include <stdexcept>

#include "mdsym/congruence.hpp"
#include "mdsym/phase.hpp"

namespace mdsym {

std::string AffineModZ::str() const {
  if (xb == 0) return q.str();
  std::string s = q.str();
  s += (xb > 0 ? " + " : " - ");
  long n = xb > 0 ? xb : -xb;
  if (n != 1) s += std::to_string(n) + "*";
  s += "X_B";
  return s;
}

Rat pairing(const GroupPreset& preset, const Word& w1, const Word& w2) {
  if (!preset.has_higher_order())
    throw std::invalid_argument("pairing: preset '" + preset.name() + "' has no weight-2 form");
  long m1 = 0, n1 = 0, m2 = 0, n2 = 0;
  auto accumulate = [&](const Word& w, long& m, long& n) {
    for (const Letter& l : w.letters) {
      const Generator& g = preset.gen(l.gen);
      m += g.hom_m * l.exp;
      n += g.hom_n * l.exp;
    }
  };
  accumulate(w1, m1, n1);
  accumulate(w2, m2, n2);
  return preset.kappa() * Rat(m1 * n2 - n1 * m2);
}

AffineModZ s_star(const GroupPreset& preset, const Word& w, SymbolCusp cusp) {
  if (!preset.has_higher_order())
    throw std::invalid_argument("s_star: preset '" + preset.name() + "' has no weight-2 form");
  if (cusp == SymbolCusp::zero && !preset.has_cusp0_table())
    throw std::invalid_argument("s_star: preset '" + preset.name() + "' has no cusp-0 table");
  constexpr long kMaxExpansion = 1'000'000;
  ModZ value;
  long xb = 0;
  long hm = 0, hn = 0;
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || l.gen >= static_cast<int>(preset.generators().size()))
      throw std::invalid_argument("s_star: letter outside alphabet");
    if (l.exp == 0) throw std::invalid_argument("s_star: zero exponent");
    const long count = l.exp > 0 ? l.exp : -l.exp;
    if (count > kMaxExpansion) throw std::invalid_argument("s_star: exponent block too large");
    const int sign = l.exp > 0 ? 1 : -1;
    const Generator& g = preset.gen(l.gen);
    const Rat table = cusp == SymbolCusp::infinity ? g.s_star_inf : g.s_star_cusp0;
    for (long i = 0; i < count; ++i) {
      const Rat letter_value = sign > 0 ? table : -table;  // S*(g^{-1}) = -S*(g) mod 1
      const long lm = sign * g.hom_m;
      const long ln = sign * g.hom_n;
      value = value + ModZ(letter_value + preset.kappa() * Rat(hm * ln - hn * lm));
      xb += sign * g.s_star_xb;
      hm += lm;
      hn += ln;
    }
  }
  return {value, xb};
}

ModZ theta(const GroupPreset& preset, const Word& w) {
  if (preset.name() != "gamma0-11")
    throw std::invalid_argument("theta: exact S is only available for gamma0-11");
  const AffineModZ star = s_star(preset, w, SymbolCusp::infinity);
  const Rat s = dedekind_symbol_gamma0(preset.level(), eval_word(preset, w));
  return ModZ(star.q.value() - s);
}

Rat s_star_parabolic(const Rat& volume_over_pi, bool same_cusp, const Int& h) {
  (void)volume_over_pi;
  (void)same_cusp;
  (void)h;
  return Rat(0);
}

Rat s_star_elliptic(const ScaledMat& elliptic, int order) {
  return symbol_elliptic(elliptic, order);
}

Rat transfer_plus(const Int& p, const ScaledMat& m, const Rat& s_star_on_gamma0) {
  if (!in_gamma0(m, p)) throw std::invalid_argument("transfer_plus: matrix not in Gamma_0(p)");
  const int a = sgn(m.a()), b = sgn(m.b()), c = sgn(m.c());
  if (c >= 0 && a <= 0 && b > 0) return s_star_on_gamma0 + Rat(1, 2);
  if (c < 0 && a <= 0 && b <= 0) return s_star_on_gamma0 - Rat(1, 2);
  return s_star_on_gamma0;
}

bool iota_star_check(const GroupPreset& preset, const Word& w) {
  const ScaledMat g = eval_word(preset, w);
  const Word wi = solve_word(preset, iota(g));
  const AffineModZ lhs = s_star(preset, wi);
  const AffineModZ rhs_part = s_star(preset, w);
  const ModZ rhs = ModZ(-rhs_part.q.value() - Rat(rho(g)));
  return lhs.xb == -rhs_part.xb && lhs.q == rhs;
}

}  // namespace mdsym
