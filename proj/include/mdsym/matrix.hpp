#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "mdsym/rational.hpp"

namespace mdsym {

/// Integer 2x2 matrix (a b; c d) with positive scale e, representing the real
/// matrix (1/sqrt(e))*(a b; c d) of determinant 1.
///
/// Invariants: a*d - b*c == e >= 1, and the stored form is normalized: the
/// entries carry no common factor g with g*g | e. e == 1 covers ordinary
/// integer matrices. -I is kept distinct from I (we work in SL, not PSL).
class ScaledMat {
 public:
  ScaledMat() : a_(1), b_(0), c_(0), d_(1), e_(1) {}
  ScaledMat(Int a, Int b, Int c, Int d) : ScaledMat(a, b, c, d, Int(1)) {}
  ScaledMat(Int a, Int b, Int c, Int d, Int e);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }
  const Int& e() const { return e_; }

  Int trace() const { return a_ + d_; }
  bool is_identity() const { return e_ == 1 && a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
  bool is_minus_identity() const { return e_ == 1 && a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1; }
  bool is_plus_minus_identity() const { return is_identity() || is_minus_identity(); }

  ScaledMat inverse() const { return ScaledMat(d_, -b_, -c_, a_, e_); }
  ScaledMat operator-() const { return ScaledMat(-a_, -b_, -c_, -d_, e_); }
  friend ScaledMat operator*(const ScaledMat& x, const ScaledMat& y);

  friend bool operator==(const ScaledMat& x, const ScaledMat& y) = default;

  /// Moebius action on the upper half plane (the scale cancels).
  std::complex<double> moebius(std::complex<double> z) const;
  /// Automorphy factor j(M,z) = (c z + d)/sqrt(e).
  std::complex<double> j_factor(std::complex<double> z) const;

  /// Text format "a,b,c,d" for e=1, else "a,b,c,d;e"; whitespace ignored.
  static ScaledMat parse(std::string_view text);
  std::string str() const;

 private:
  Int a_, b_, c_, d_, e_;
  void normalize();
};

ScaledMat mat_T();         // (1 1; 0 1)
ScaledMat mat_S();         // (0 -1; 1 0)
ScaledMat mat_minus_I();   // -I
ScaledMat mat_T_pow(const Int& k);
ScaledMat mat_pow(const ScaledMat& m, unsigned long k);

bool is_squarefree(const Int& n);

/// Membership in the Hecke congruence group Gamma_0(N): e == 1 and N | c.
bool in_gamma0(const ScaledMat& m, const Int& n);

/// Membership in Gamma_0(N)^+ for squarefree N: e | N, e | a, e | d, N | c.
/// Throws std::invalid_argument if N is not squarefree.
bool in_gamma0_plus(const ScaledMat& m, const Int& n);

/// Cusp p/q with gcd(p,q) = 1; q == 0 encodes infinity (with p = 1).
struct Cusp {
  Int p;
  Int q;
  Cusp() : p(1), q(0) {}
  Cusp(Int pp, Int qq);
  bool is_infinity() const { return q == 0; }
  friend bool operator==(const Cusp&, const Cusp&) = default;
  std::string str() const;
};

/// Image of the cusp under the fractional-linear action, e.g. sigma * infinity.
Cusp apply_to_cusp(const ScaledMat& m, const Cusp& c);

}  // namespace mdsym
