#pragma once

#include "mdsym/rational.hpp"
#include "mdsym/words.hpp"

namespace mdsym {

/// Value in R/Z plus an integer multiple of one undetermined generator value
/// (X_B, the higher-order symbol of B on Gamma_0(37)^+). xb == 0 collapses
/// to a plain ModZ.
struct AffineModZ {
  ModZ q;
  long xb = 0;
  friend bool operator==(const AffineModZ&, const AffineModZ&) = default;
  std::string str() const;  // "p/q" or "p/q + n*X_B"
};

enum class SymbolCusp { infinity, zero };

/// kappa * (m1 n2 - n1 m2) from the words' A/B exponent sums; equals
/// (V_f / 2 pi) Im(<w1,f> conj <w2,f>).
Rat pairing(const GroupPreset& preset, const Word& w1, const Word& w2);

/// Higher-order modular Dedekind symbol S* mod 1, computed by folding the
/// cocycle S*(g t) = S*(g) + S*(t) + kappa (m1 n2 - n1 m2) + omega over the
/// word, with the preset's generator table. Exponent blocks are expanded to
/// unit letters. The value depends only on eval_word(w), not on the word.
AffineModZ s_star(const GroupPreset& preset, const Word& w,
                  SymbolCusp cusp = SymbolCusp::infinity);

/// theta = S* - S mod 1 at the cusp infinity (Gamma_0(11), where S is exact).
ModZ theta(const GroupPreset& preset, const Word& w);

/// Parabolic law for S*: elements conjugate to +(1 h; 0 1) give 0.
Rat s_star_parabolic(const Rat& volume_over_pi, bool same_cusp, const Int& h);

/// Elliptic law: S* agrees with S on elliptic elements.
Rat s_star_elliptic(const ScaledMat& elliptic, int order);

/// Transfer S* from Gamma_0(p) to Gamma_0(p)^+ for m in Gamma_0(p):
/// +1/2 when c >= 0, a <= 0, b > 0; -1/2 when c < 0, a <= 0, b <= 0;
/// unchanged otherwise.
Rat transfer_plus(const Int& p, const ScaledMat& m, const Rat& s_star_on_gamma0);

/// Checks S*(iota(g)) = -S*(g) - rho(g) mod 1 for g = eval_word(w), solving
/// a word for iota(g) internally. Word-solver failures propagate.
bool iota_star_check(const GroupPreset& preset, const Word& w);

}  // namespace mdsym
