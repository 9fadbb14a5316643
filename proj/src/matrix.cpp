#include "mdsym/matrix.hpp"

#include <cctype>
#include <vector>

namespace mdsym {

ScaledMat::ScaledMat(Int a, Int b, Int c, Int d, Int e)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), e_(std::move(e)) {
  if (sgn(e_) <= 0) throw std::invalid_argument("ScaledMat: scale must be positive");
  if (a_ * d_ - b_ * c_ != e_) throw std::invalid_argument("ScaledMat: determinant a*d - b*c must equal e");
  normalize();
}

// Divide out the largest g with g | gcd(a,b,c,d) and g^2 | e. Only primes
// dividing e can contribute, so trial-divide e.
void ScaledMat::normalize() {
  if (e_ == 1) return;
  Int h = gcd(gcd(a_, b_), gcd(c_, d_));
  if (h == 0 || h == 1) return;
  Int g(1);
  Int rem = e_;
  Int p(2);
  while (p * p <= rem) {
    if (divides(p, rem)) {
      int ve = 0;
      while (divides(p, rem)) {
        rem /= p;
        ++ve;
      }
      if (ve >= 2) {
        int vh = 0;
        Int hh = h;
        while (divides(p, hh)) {
          hh /= p;
          ++vh;
        }
        int k = std::min(vh, ve / 2);
        for (int i = 0; i < k; ++i) g *= p;
      }
    }
    ++p;
  }
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
    d_ /= g;
    e_ /= g * g;
  }
}

ScaledMat operator*(const ScaledMat& x, const ScaledMat& y) {
  return ScaledMat(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                   x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_, x.e_ * y.e_);
}

std::complex<double> ScaledMat::moebius(std::complex<double> z) const {
  std::complex<double> num = a_.get_d() * z + b_.get_d();
  std::complex<double> den = c_.get_d() * z + d_.get_d();
  return num / den;
}

std::complex<double> ScaledMat::j_factor(std::complex<double> z) const {
  return (c_.get_d() * z + d_.get_d()) / std::sqrt(e_.get_d());
}

Int parse_int(std::string_view s) {
  std::string t;
  t.reserve(s.size());
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("empty integer");
  Int v;
  if (mpz_set_str(v.get_mpz_t(), t.c_str(), 10) != 0)
    throw std::invalid_argument("bad integer '" + t + "'");
  return v;
}

ScaledMat ScaledMat::parse(std::string_view text) {
  std::string_view entries = text;
  Int e(1);
  if (auto semi = text.find(';'); semi != std::string_view::npos) {
    entries = text.substr(0, semi);
    e = parse_int(text.substr(semi + 1));
  }
  std::vector<Int> vals;
  size_t start = 0;
  while (true) {
    size_t comma = entries.find(',', start);
    vals.push_back(parse_int(entries.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (vals.size() != 4)
    throw std::invalid_argument("matrix must have 4 entries 'a,b,c,d' (optionally ';e')");
  return ScaledMat(vals[0], vals[1], vals[2], vals[3], e);
}

std::string ScaledMat::str() const {
  std::string s = a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + "," + d_.get_str();
  if (e_ != 1) s += ";" + e_.get_str();
  return s;
}

ScaledMat mat_T() { return ScaledMat(1, 1, 0, 1); }
ScaledMat mat_S() { return ScaledMat(0, -1, 1, 0); }
ScaledMat mat_minus_I() { return ScaledMat(-1, 0, 0, -1); }
ScaledMat mat_T_pow(const Int& k) { return ScaledMat(1, k, 0, 1); }

ScaledMat mat_pow(const ScaledMat& m, unsigned long k) {
  ScaledMat acc;
  ScaledMat base = m;
  while (k > 0) {
    if (k & 1UL) acc = acc * base;
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  return acc;
}

bool is_squarefree(const Int& n) {
  if (sgn(n) <= 0) return false;
  Int rem = n;
  Int p(2);
  while (p * p <= rem) {
    if (divides(p, rem)) {
      rem /= p;
      if (divides(p, rem)) return false;
    }
    ++p;
  }
  return true;
}

bool in_gamma0(const ScaledMat& m, const Int& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("in_gamma0: level must be positive");
  return m.e() == 1 && divides(n, m.c());
}

bool in_gamma0_plus(const ScaledMat& m, const Int& n) {
  if (!is_squarefree(n)) throw std::invalid_argument("in_gamma0_plus: level must be squarefree");
  return divides(m.e(), n) && divides(m.e(), m.a()) && divides(m.e(), m.d()) &&
         divides(n, m.c());
}

Cusp::Cusp(Int pp, Int qq) : p(std::move(pp)), q(std::move(qq)) {
  if (sgn(q) < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) {
    if (p == 0) throw std::invalid_argument("Cusp: 0/0");
    p = 1;  // infinity
    return;
  }
  Int g = gcd(abs(p), q);
  if (g > 1) {
    p /= g;
    q /= g;
  }
}

std::string Cusp::str() const {
  if (is_infinity()) return "inf";
  if (q == 1) return p.get_str();
  return p.get_str() + "/" + q.get_str();
}

Cusp apply_to_cusp(const ScaledMat& m, const Cusp& c) {
  // (a b; c d) * (p : q) = (a p + b q : c p + d q); the scale cancels.
  return Cusp(m.a() * c.p + m.b() * c.q, m.c() * c.p + m.d() * c.q);
}

}  // namespace mdsym
