#include <doctest.h>

#include "helpers.hpp"
#include "mdsym/classical.hpp"
#include "mdsym/congruence.hpp"
#include "mdsym/moonshine.hpp"
#include "mdsym/phase.hpp"
#include "mdsym/words.hpp"

using namespace mdsym;
using mdsym::testing::Rng;

namespace {
const ScaledMat A37(148, -89, 185, -111, 37);
const ScaledMat B37(20, -13, 37, -24);
const ScaledMat E1(0, 1, -37, 0, 37);
const ScaledMat E2(-6, 1, -37, 6);
const ScaledMat E3(-11, 3, -37, 10);
const ScaledMat E4(37, -19, 74, -37, 37);
const ScaledMat P37(1, -1, 0, 1);
}  // namespace

TEST_CASE("Gamma_0(37)^+ symbol table") {
  CHECK(dedekind_symbol_plus(37, P37) == Rat(-19, 12));
  CHECK(dedekind_symbol_plus(37, E1) == Rat(1, 4));
  CHECK(dedekind_symbol_plus(37, E2) == Rat(1, 4));
  CHECK(dedekind_symbol_plus(37, E3) == Rat(1, 3));
  CHECK(dedekind_symbol_plus(37, E4) == Rat(-1, 4));
  CHECK(dedekind_symbol_plus(37, A37) == Rat(1, 6));
  CHECK(dedekind_symbol_plus(37, B37) == Rat(-7, 12));
}

TEST_CASE("prime-level closed form on the same table") {
  CHECK(dedekind_symbol_plus_prime(37, P37) == Rat(-19, 12));
  CHECK(dedekind_symbol_plus_prime(37, E1) == Rat(1, 4));
  CHECK(dedekind_symbol_plus_prime(37, E2) == Rat(1, 4));
  CHECK(dedekind_symbol_plus_prime(37, E3) == Rat(1, 3));
  CHECK(dedekind_symbol_plus_prime(37, E4) == Rat(-1, 4));
  CHECK(dedekind_symbol_plus_prime(37, A37) == Rat(1, 6));
  CHECK(dedekind_symbol_plus_prime(37, B37) == Rat(-7, 12));
  CHECK_THROWS_AS(dedekind_symbol_plus_prime(15, ScaledMat(1, 0, 15, 1)),
                  std::invalid_argument);  // 15 not prime
}

TEST_CASE("tau_p and the d=0 branches") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 37L}) {
    const ScaledMat tau = tau_matrix(p);
    CHECK(dedekind_symbol_plus(p, tau) == Rat(-1, 4));
    CHECK(dedekind_symbol_plus_prime(p, tau) == Rat(-1, 4));
  }
  // v=p, d=0, c<0 branch: a(p+1)/(24c) + 1/4 evaluated at E1 (a=0) gives 1/4.
  CHECK(dedekind_symbol_plus_prime(37, E1) == Rat(1, 4));
  // v=p, d=0, c>0: matrices (ap, -1; p, 0) with value a(p+1)/24 - 1/4.
  for (long a = -3; a <= 3; ++a) {
    const ScaledMat g(a * 37, -1, 37, 0, 37);
    CHECK(dedekind_symbol_plus_prime(37, g) == Rat(a * 38, 24) - Rat(1, 4));
    CHECK(dedekind_symbol_plus(37, g) == dedekind_symbol_plus_prime(37, g));
  }
}

TEST_CASE("level 1 collapses to the classical symbol") {
  Rng rng(79);
  for (int i = 0; i < 200; ++i) {
    const ScaledMat g = testing::random_sl2z(rng, 4);
    CHECK(dedekind_symbol_plus_congruence(1, g) == dedekind_symbol_sl2z(g));
  }
}

TEST_CASE("route agreement on random elements of both cosets") {
  Rng rng(83);
  for (long p : {2L, 3L, 5L, 7L, 11L, 37L}) {
    for (int i = 0; i < 100; ++i) {
      const ScaledMat g = testing::random_gamma0(rng, p);  // the Gamma_0(p) coset
      CHECK(dedekind_symbol_plus_prime(p, g) == dedekind_symbol_plus(p, g));
      const ScaledMat h = g * tau_matrix(p);               // the tau_p coset
      CHECK(dedekind_symbol_plus_prime(p, h) == dedekind_symbol_plus(p, h));
    }
  }
}

TEST_CASE("cocycle on Gamma_0(37)^+") {
  const GroupPreset& preset = GroupPreset::gamma0_37plus();
  Rng rng(89);
  for (int i = 0; i < 1000; ++i) {
    const ScaledMat g = eval_word(preset, random_word(preset, 1 + rng() % 8, rng()));
    const ScaledMat t = eval_word(preset, random_word(preset, 1 + rng() % 8, rng()));
    CHECK(dedekind_symbol_plus(37, g * t) ==
          dedekind_symbol_plus(37, g) + dedekind_symbol_plus(37, t) +
              Rat(omega_petersson(g, t)));
  }
}

TEST_CASE("integrality of the denominators") {
  const GroupPreset& preset = GroupPreset::gamma0_37plus();
  Rng rng(97);
  for (int i = 0; i < 300; ++i) {
    const ScaledMat g = eval_word(preset, random_word(preset, 1 + rng() % 10, rng()));
    CHECK((Rat(12) * dedekind_symbol_plus(37, g)).is_integer());
  }
  for (long n : {2L, 3L, 5L, 6L, 37L}) {
    for (int i = 0; i < 200; ++i) {
      const ScaledMat g = testing::random_gamma0_plus(rng, n);
      CHECK((Rat(48) * dedekind_symbol_plus(n, g)).is_integer());
    }
  }
}

TEST_CASE("squarefree precondition") {
  CHECK_THROWS_AS(dedekind_symbol_plus(12, mat_T()), std::invalid_argument);
  CHECK_THROWS_AS(dedekind_symbol_plus_congruence(12, mat_T()), std::invalid_argument);
}

TEST_CASE("ell invariant is exposed as data") {
  CHECK(ell_invariant(37) == 12);  // see the open-questions note: not asserted against S
  CHECK(ell_invariant(1) == 24);
  CHECK_THROWS_AS(ell_invariant(12), std::invalid_argument);
}
