#include <doctest.h>

#include "helpers.hpp"
#include "mdsym/congruence.hpp"
#include "mdsym/higher_order.hpp"
#include "mdsym/phase.hpp"

using namespace mdsym;
using mdsym::testing::Rng;

namespace {

Word letters(const GroupPreset& p, std::initializer_list<std::pair<const char*, long>> ls) {
  Word w;
  for (auto& [name, exp] : ls) w.letters.push_back({p.find(name), exp});
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

Word inverse_word(const Word& a) {
  Word w;
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    w.letters.push_back({it->gen, -it->exp});
  return w;
}

}  // namespace

TEST_CASE("pairing values") {
  const GroupPreset& p11 = GroupPreset::gamma0_11();
  CHECK(pairing(p11, letters(p11, {{"A", 1}}), letters(p11, {{"B", 1}})) == Rat(1, 2));
  CHECK(pairing(p11, letters(p11, {{"A", 1}}), letters(p11, {{"A", 1}})) == Rat(0));
  const GroupPreset& p37 = GroupPreset::gamma0_37plus();
  CHECK(pairing(p37, letters(p37, {{"A", 1}}), letters(p37, {{"B", 1}})) == Rat(-19, 24));
  CHECK_THROWS_AS(pairing(GroupPreset::sl2z(), Word{}, Word{}), std::invalid_argument);
}

TEST_CASE("S* generator table and fold") {
  const GroupPreset& p = GroupPreset::gamma0_11();
  CHECK(s_star(p, letters(p, {{"A", 1}})) == AffineModZ{ModZ(Rat(9, 10)), 0});
  CHECK(s_star(p, letters(p, {{"B", 1}})) == AffineModZ{ModZ(Rat(1, 10)), 0});
  CHECK(s_star(p, letters(p, {{"A", 1}, {"B", 1}})) == AffineModZ{ModZ(Rat(1, 2)), 0});
  CHECK(s_star(p, letters(p, {{"A", 1}}), SymbolCusp::zero) ==
        AffineModZ{ModZ(Rat(1, 10)), 0});
  CHECK(s_star(p, letters(p, {{"B", 1}}), SymbolCusp::zero) ==
        AffineModZ{ModZ(Rat(9, 10)), 0});
  CHECK(s_star(p, Word{}).q.is_zero());
  for (const Word& rel : p.relations()) CHECK(s_star(p, rel).q.is_zero());

  const GroupPreset& p37 = GroupPreset::gamma0_37plus();
  const AffineModZ b = s_star(p37, letters(p37, {{"B", 1}}));
  CHECK(b.q.is_zero());
  CHECK(b.xb == 1);
  CHECK(b.str() == "0 + X_B");
  CHECK(s_star(p37, letters(p37, {{"A", 1}})) == AffineModZ{ModZ(Rat(-5, 8)), 0});
  for (const Word& rel : p37.relations()) {
    const AffineModZ v = s_star(p37, rel);
    CHECK(v.q.is_zero());
    CHECK(v.xb == 0);
  }
  CHECK_THROWS_AS(s_star(p37, Word{}, SymbolCusp::zero), std::invalid_argument);
  CHECK_THROWS_AS(s_star(GroupPreset::sl2z(), Word{}), std::invalid_argument);
}

TEST_CASE("well-definedness: the value depends only on the matrix") {
  Rng rng(107);
  for (const GroupPreset* p : {&GroupPreset::gamma0_11(), &GroupPreset::gamma0_37plus()}) {
    for (int i = 0; i < 150; ++i) {
      const Word w = random_word(*p, 1 + rng() % 18, rng());
      const ScaledMat m = eval_word(*p, w);
      const Word resolved = solve_word(*p, m);
      CHECK(s_star(*p, w) == s_star(*p, resolved));
    }
  }
}

TEST_CASE("denominator divides 10 on Gamma_0(11), both cusps") {
  const GroupPreset& p = GroupPreset::gamma0_11();
  Rng rng(109);
  for (int i = 0; i < 400; ++i) {
    const Word w = random_word(p, 1 + rng() % 20, rng());
    CHECK(divides(s_star(p, w).q.value().den(), 10));
    CHECK(divides(s_star(p, w, SymbolCusp::zero).q.value().den(), 10));
  }
}

TEST_CASE("third-order relation for S* mod 1") {
  Rng rng(113);
  for (const GroupPreset* p : {&GroupPreset::gamma0_11(), &GroupPreset::gamma0_37plus()}) {
    for (int i = 0; i < 300; ++i) {
      const Word w1 = random_word(*p, 1 + rng() % 8, rng());
      const Word w2 = random_word(*p, 1 + rng() % 8, rng());
      const Word w3 = random_word(*p, 1 + rng() % 8, rng());
      const AffineModZ lhs = s_star(*p, concat(concat(w1, w2), w3));
      const AffineModZ t12 = s_star(*p, concat(w1, w2));
      const AffineModZ t13 = s_star(*p, concat(w1, w3));
      const AffineModZ t23 = s_star(*p, concat(w2, w3));
      const AffineModZ s1 = s_star(*p, w1);
      const AffineModZ s2 = s_star(*p, w2);
      const AffineModZ s3 = s_star(*p, w3);
      CHECK(lhs.q == ModZ(t12.q.value() + t13.q.value() + t23.q.value() - s1.q.value() -
                          s2.q.value() - s3.q.value()));
      CHECK(lhs.xb == t12.xb + t13.xb + t23.xb - s1.xb - s2.xb - s3.xb);
    }
  }
}

TEST_CASE("theta values and laws") {
  const GroupPreset& p = GroupPreset::gamma0_11();
  CHECK(theta(p, letters(p, {{"Pinf", 1}})).is_zero());
  CHECK(theta(p, letters(p, {{"-I", 1}})).is_zero());
  CHECK(theta(p, letters(p, {{"A", 1}})) == ModZ(Rat(3, 10)));
  CHECK_THROWS_AS(theta(GroupPreset::gamma0_37plus(), Word{}), std::invalid_argument);

  Rng rng(127);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(p, 1 + rng() % 10, rng());
    // theta(g^{-1}) = -theta(g); theta(-g) = theta(g)
    CHECK(theta(p, inverse_word(w)) == -theta(p, w));
    Word minus = w;
    minus.letters.push_back({p.find("-I"), 1});
    CHECK(theta(p, minus) == theta(p, w));
  }
  // theta third-order identity, exact in ModZ
  for (int i = 0; i < 300; ++i) {
    const Word w1 = random_word(p, 1 + rng() % 8, rng());
    const Word w2 = random_word(p, 1 + rng() % 8, rng());
    const Word w3 = random_word(p, 1 + rng() % 8, rng());
    const ModZ lhs = theta(p, concat(concat(w1, w2), w3));
    const ModZ rhs = ModZ(theta(p, concat(w1, w2)).value() + theta(p, concat(w1, w3)).value() +
                          theta(p, concat(w2, w3)).value() - theta(p, w1).value() -
                          theta(p, w2).value() - theta(p, w3).value());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("S*(-g) = S*(g) - 1/2 mod 1") {
  const GroupPreset& p = GroupPreset::gamma0_11();
  Rng rng(131);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(p, 1 + rng() % 10, rng());
    Word minus = w;
    minus.letters.push_back({p.find("-I"), 1});
    CHECK(s_star(p, minus).q == ModZ(s_star(p, w).q.value() - Rat(1, 2)));
  }
}

TEST_CASE("X_B coefficient tracks the B exponent sum") {
  const GroupPreset& p = GroupPreset::gamma0_37plus();
  Rng rng(137);
  for (int i = 0; i < 300; ++i) {
    const Word w = random_word(p, 1 + rng() % 20, rng());
    const AffineModZ v = s_star(p, w);
    CHECK(v.xb == exponent_sums(p, w, "A", "B").second);
    CHECK(divides(v.q.value().den(), 24));  // q-part denominator with X_B = 0
  }
}

TEST_CASE("parabolic and elliptic S* laws") {
  CHECK(s_star_parabolic(Rat(4), true, 1) == Rat(0));
  CHECK(s_star_parabolic(Rat(19, 3), true, -1) == Rat(0));
  CHECK(s_star_elliptic(ScaledMat(-11, 3, -37, 10), 3) == Rat(1, 3));
  CHECK(s_star_elliptic(ScaledMat(0, 1, -37, 0, 37), 4) == Rat(1, 4));
}

TEST_CASE("transfer to the plus group") {
  // otherwise-branch: c=0, a=1
  CHECK(transfer_plus(37, mat_T(), Rat(1, 8)) == Rat(1, 8));
  // c >= 0, a <= 0, b > 0
  CHECK(transfer_plus(37, ScaledMat(-1, 1, 0, -1), Rat(0)) == Rat(1, 2));
  // c < 0, a <= 0, b <= 0
  CHECK(transfer_plus(37, ScaledMat(-1, 0, -37, -1), Rat(0)) == Rat(-1, 2));
  CHECK_THROWS_AS(transfer_plus(37, tau_matrix(37), Rat(0)), std::invalid_argument);
}

TEST_CASE("iota symmetry of S*") {
  const GroupPreset& p = GroupPreset::gamma0_11();
  CHECK(iota_star_check(p, Word{}));
  CHECK(iota_star_check(p, Word{{{p.find("A"), 1}}}));
  Rng rng(139);
  for (int i = 0; i < 100; ++i)
    CHECK(iota_star_check(p, random_word(p, 1 + rng() % 12, rng())));
}
