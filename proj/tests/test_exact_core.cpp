#include <doctest.h>

#include "helpers.hpp"
#include "mdsym/arith.hpp"
#include "mdsym/matrix.hpp"
#include "mdsym/rational.hpp"

using namespace mdsym;
using mdsym::testing::Rng;

TEST_CASE("Rat reduction and arithmetic") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-3, -6) == Rat(1, 2));
  CHECK(Rat(3, -6) == Rat(-1, 2));
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
  CHECK(Rat(7, 3).floor() == 2);
  CHECK(Rat(-7, 3).floor() == -3);
  CHECK(Rat(-7, 3).frac() == Rat(2, 3));
  CHECK(Rat(5).is_integer());
  CHECK(Rat(-1, 18).str() == "-1/18");
  CHECK(Rat(4, 2).str() == "2");
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("ModZ canonical representative") {
  CHECK(ModZ(Rat(13, 10)) == ModZ(Rat(3, 10)));
  CHECK(ModZ(Rat(-1, 10)) == ModZ(Rat(9, 10)));
  CHECK((ModZ(Rat(9, 10)) + ModZ(Rat(3, 10))) == ModZ(Rat(1, 5)));
  CHECK((-ModZ(Rat(1, 4))) == ModZ(Rat(3, 4)));
  CHECK(ModZ(Rat(2)).is_zero());
}

TEST_CASE("mat_mul examples") {
  const ScaledMat tau11(0, -1, 11, 0, 11);
  CHECK(tau11 * tau11 == mat_minus_I());  // tau_p^2 = -I
  CHECK(mat_T() * mat_T() == ScaledMat(1, 2, 0, 1));
  const ScaledMat A(-7, -1, 22, 3), B(4, 1, -33, -8);
  CHECK(A * B == ScaledMat(5, 1, -11, -2));
}

TEST_CASE("mat_inv examples and identity") {
  CHECK(mat_T().inverse() == ScaledMat(1, -1, 0, 1));
  CHECK(mat_S().inverse() == ScaledMat(0, 1, -1, 0));
  const ScaledMat m(148, -89, 185, -111, 37);
  CHECK(m.inverse() == ScaledMat(-111, 89, -185, 148, 37));  // adjugate
  CHECK((m * m.inverse()).is_identity());
  CHECK((m.inverse() * m).is_identity());
}

TEST_CASE("normalization is canonical and det-preserving") {
  CHECK(ScaledMat(2, 0, 0, 2, 4).is_identity());
  CHECK(ScaledMat(0, -37, 37, 0, 37 * 37) == ScaledMat(0, -1, 1, 0));
  CHECK_THROWS_AS(ScaledMat(1, 2, 3, 4, 1), std::invalid_argument);  // det != e
  CHECK_THROWS_AS(ScaledMat(1, 0, 0, -1, -1), std::invalid_argument);

  Rng rng(7);
  const ScaledMat tau37 = ScaledMat(0, -1, 37, 0, 37);
  for (int i = 0; i < 200; ++i) {
    ScaledMat x = testing::random_sl2z(rng, 3);
    ScaledMat y = testing::random_sl2z(rng, 3);
    if (i % 3 == 0) x = x * tau37;
    const ScaledMat p = x * y;
    CHECK(p.a() * p.d() - p.b() * p.c() == p.e());
    // re-normalizing a normalized matrix changes nothing
    CHECK(ScaledMat(p.a(), p.b(), p.c(), p.d(), p.e()) == p);
    const ScaledMat q = x.inverse();
    CHECK(q.a() * q.d() - q.b() * q.c() == q.e());
  }
}

TEST_CASE("mat_mul associative on random triples") {
  Rng rng(11);
  const ScaledMat tau11 = ScaledMat(0, -1, 11, 0, 11);
  for (int i = 0; i < 200; ++i) {
    ScaledMat x = testing::random_sl2z(rng, 3);
    ScaledMat y = testing::random_sl2z(rng, 3);
    ScaledMat z = testing::random_sl2z(rng, 3);
    if (i % 2) y = y * tau11;
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("membership predicates") {
  CHECK(in_gamma0(ScaledMat(-7, -1, 22, 3), 11));
  CHECK_FALSE(in_gamma0(mat_S(), 11));
  CHECK(in_gamma0(mat_T(), 11));
  CHECK(in_gamma0(mat_T(), 1));

  CHECK(in_gamma0_plus(ScaledMat(0, 1, -37, 0, 37), 37));  // E1 = -tau_37
  CHECK(in_gamma0_plus(ScaledMat(148, -89, 185, -111, 37), 37));
  // scale 2 does not divide 37
  CHECK_FALSE(in_gamma0_plus(ScaledMat(2, 1, 2, 2, 2), 37));
  CHECK_THROWS_AS(in_gamma0_plus(mat_T(), 12), std::invalid_argument);  // 12 not squarefree
  CHECK_THROWS_AS(in_gamma0(mat_T(), 0), std::invalid_argument);
  CHECK(in_gamma0_plus(ScaledMat(2, 1, 6, 4, 2), 6));   // e=2 | 6, 2|a, 2|d, 6|c
  CHECK_FALSE(in_gamma0_plus(ScaledMat(1, 0, 2, 1), 6));  // 6 does not divide c
}

TEST_CASE("matrix text format") {
  CHECK(ScaledMat::parse("1,1,0,1") == mat_T());
  CHECK(ScaledMat::parse(" -7 , -1 , 22 , 3 ") == ScaledMat(-7, -1, 22, 3));
  CHECK(ScaledMat::parse("0,-1,11,0;11") == ScaledMat(0, -1, 11, 0, 11));
  CHECK(ScaledMat(0, -1, 11, 0, 11).str() == "0,-1,11,0;11");
  CHECK(mat_T().str() == "1,1,0,1");
  CHECK(ScaledMat::parse(mat_S().str()) == mat_S());
  CHECK_THROWS_AS(ScaledMat::parse("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(ScaledMat::parse("1,x,0,1"), std::invalid_argument);
}

TEST_CASE("cusp reduction") {
  CHECK(Cusp(2, 4) == Cusp(1, 2));
  CHECK(Cusp(3, 0).is_infinity());
  CHECK(Cusp(3, 0).p == 1);
  CHECK(Cusp(-2, -4) == Cusp(1, 2));
  CHECK(apply_to_cusp(ScaledMat(0, -1, 11, 0, 11), Cusp()) == Cusp(0, 1));  // tau_11 inf = 0
}

TEST_CASE("arith data") {
  const ArithData a11 = arith(11);
  CHECK(a11.vol_gamma0 == Rat(4));  // 4 pi
  CHECK(a11.alpha == Rat(11, 10));
  CHECK(a11.beta == Rat(12, 11));
  CHECK(a11.psi == 12);
  CHECK(a11.sigma1 == 12);
  CHECK(a11.divisors == std::vector<Int>{1, 11});
  CHECK(a11.mobius == std::vector<int>{1, -1});

  const ArithData a37 = arith(37);
  CHECK(a37.vol_gamma0_plus == Rat(19, 3));  // 19 pi / 3

  const ArithData a12 = arith(12);
  CHECK_FALSE(a12.squarefree);
  CHECK(a12.divisors.size() == 6);
  CHECK(a12.mobius_of(6) == 1);
  CHECK(a12.mobius_of(4) == 0);

  CHECK(arith(1).vol_gamma0 == Rat(1, 3));  // pi/3
  CHECK_THROWS_AS(arith(0), std::invalid_argument);
}

TEST_CASE("Gauss-Bonnet for the preset signatures") {
  CHECK(GroupData{0, 1, {2, 3}, Rat(1, 3)}.gauss_bonnet_ok());         // SL(2,Z)
  CHECK(GroupData{1, 2, {}, Rat(4)}.gauss_bonnet_ok());                // Gamma_0(11)
  CHECK(GroupData{1, 1, {2, 2, 2, 3}, Rat(19, 3)}.gauss_bonnet_ok());  // Gamma_0(37)^+
  CHECK_FALSE(GroupData{1, 1, {2, 2, 2, 3}, Rat(6)}.gauss_bonnet_ok());
}

TEST_CASE("central binomial identity") {
  CHECK(central_binomial_check(0));  // 1 = 1
  CHECK(central_binomial_check(1));  // 2 + 6 = 8
  CHECK(central_binomial_check(2));  // 6 + 12 + 30 = 48
  for (int n = 0; n <= 30; ++n) CHECK(central_binomial_check(n));
}
