#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mdsym {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int abs(const Int& x) {
  Int r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

/// Floor quotient (rounds toward -infinity); divisor must be nonzero.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Non-negative remainder a - fdiv(a,b)*b for b > 0.
inline Int fmod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (sgn(d) == 0) return sgn(a) == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int parse_int(std::string_view s);

/// Rational number, always in lowest terms with denominator >= 1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) {
    if (mpz_sgn(den.get_mpz_t()) == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rat(long num, long den) : Rat(Int(num), Int(den)) {}

  Int num() const { return Int(v_.get_num()); }
  Int den() const { return Int(v_.get_den()); }

  bool is_zero() const { return sgn() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sgn() const { return mpq_sgn(v_.get_mpq_t()); }

  /// Largest integer <= value.
  Int floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }
  /// Fractional part in [0,1).
  Rat frac() const { return *this - Rat(floor()); }

  double to_double() const { return v_.get_d(); }

  /// Reduced fraction "p/q", or plain "p" for integers.
  std::string str() const { return v_.get_str(); }

  friend Rat operator+(const Rat& a, const Rat& b) { return wrap(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return wrap(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return wrap(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::invalid_argument("Rat: division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rat operator-() const { return wrap(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  static Rat wrap(mpq_class v) {
    Rat r;
    r.v_ = std::move(v);
    return r;
  }
  mpq_class v_;
};

/// Rational reduced modulo 1; canonical representative in [0,1).
class ModZ {
 public:
  ModZ() : v_(0) {}
  explicit ModZ(const Rat& r) : v_(r.frac()) {}

  const Rat& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  friend ModZ operator+(const ModZ& a, const ModZ& b) { return ModZ(a.v_ + b.v_); }
  friend ModZ operator-(const ModZ& a, const ModZ& b) { return ModZ(a.v_ - b.v_); }
  ModZ operator-() const { return ModZ(-v_); }
  friend bool operator==(const ModZ& a, const ModZ& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ModZ& a, const ModZ& b) { return a.v_ != b.v_; }

  std::string str() const { return v_.str(); }

 private:
  Rat v_;  // invariant: 0 <= v_ < 1
};

}  // namespace mdsym
