#include "mdsym/numerics.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "mdsym/arith.hpp"
#include "mdsym/classical.hpp"
#include "mdsym/congruence.hpp"
#include "mdsym/moonshine.hpp"
#include "mdsym/phase.hpp"

namespace mdsym {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kEtaTermCap = 400000;

// Principal branch with arg in (-pi, pi]: negative reals with imag -0.0 must
// land on the +pi side.
Cplx principal_log(Cplx w) {
  if (w.imag() == 0.0) w = Cplx(w.real(), +0.0);
  return std::log(w);
}

// sigma_{-1}(k) = sigma_1(k)/k, sieved and cached; callers keep a snapshot so
// concurrent growth never invalidates a table in use.
std::shared_ptr<const std::vector<double>> sigma_minus_one_table(int upto) {
  static std::shared_ptr<const std::vector<double>> table;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!table || static_cast<int>(table->size()) <= upto) {
    const int n = std::max(upto + 1, table ? static_cast<int>(table->size()) * 2 : 1024);
    auto fresh = std::make_shared<std::vector<double>>(static_cast<size_t>(n), 0.0);
    for (int d = 1; d < n; ++d)
      for (int k = d; k < n; k += d) (*fresh)[static_cast<size_t>(k)] += 1.0 / d;
    table = std::move(fresh);
  }
  return table;
}

std::vector<long long> sigma1_table(int upto) {
  std::vector<long long> s(static_cast<size_t>(upto) + 1, 0);
  for (int d = 1; d <= upto; ++d)
    for (int k = d; k <= upto; k += d) s[static_cast<size_t>(k)] += d;
  return s;
}

int eta_terms_needed(double q_abs, double tol) {
  if (!(q_abs < 1.0)) throw std::invalid_argument("log_eta: Im z must be positive");
  const double log_q = std::log(q_abs);
  int t = 4;
  while (t < kEtaTermCap) {
    const double bound = 2.0 * std::exp(log_q * (t + 1)) * (1.0 + std::log(double(t))) / (1.0 - q_abs);
    if (bound < tol) return t;
    t = t < 64 ? t + 4 : t + std::max(4, t / 16);
  }
  throw std::runtime_error("log_eta: term budget exceeded (Im z too small for tol)");
}

}  // namespace

Cplx log_eta(Cplx z, double tol) {
  if (!(z.imag() > 0)) throw std::invalid_argument("log_eta: Im z must be positive");
  const Cplx two_pi_i(0.0, 2.0 * kPi);
  const Cplx q = std::exp(two_pi_i * z);
  const int t = eta_terms_needed(std::abs(q), tol);
  const auto sig = sigma_minus_one_table(t);
  Cplx sum = 0.0;
  Cplx qk = 1.0;
  for (int k = 1; k <= t; ++k) {
    qk *= q;
    sum += (*sig)[static_cast<size_t>(k)] * qk;
  }
  return Cplx(0.0, kPi) * z / 12.0 - sum;
}

Cplx log_eta_N(const Int& n, Cplx z, double tol) {
  const ArithData ar = arith(n);
  const double each = tol / (2.0 * static_cast<double>(ar.divisors.size()));
  Cplx sum = 0.0;
  for (size_t i = 0; i < ar.divisors.size(); ++i) {
    const Int& v = ar.divisors[i];
    const int mu = ar.mobius_of(n / v);
    if (mu == 0) continue;
    sum += Rat(v, n).to_double() * mu * log_eta(v.get_d() * z, each);
  }
  return ar.alpha.to_double() * sum;
}

Cplx log_eta_plus(const Int& n, Cplx z, double tol) {
  const ArithData ar = arith(n);
  if (!ar.squarefree) throw std::invalid_argument("log_eta_plus: N must be squarefree");
  const double each = tol / (2.0 * static_cast<double>(ar.divisors.size()));
  Cplx sum = 0.0;
  for (const Int& v : ar.divisors) sum += log_eta(v.get_d() * z, each);
  return sum / std::pow(2.0, ar.prime_factors);
}

Cplx eta_residual(const GroupPreset& preset, const ScaledMat& g, Cplx z, double tol) {
  if (!preset.contains(g))
    throw std::invalid_argument("eta_residual: matrix not in group '" + preset.name() + "'");
  const Cplx gz = g.moebius(z);
  Cplx lhs;
  Rat symbol;
  if (preset.name() == "sl2z") {
    lhs = log_eta(gz, tol) - log_eta(z, tol);
    symbol = dedekind_symbol_sl2z(g);
  } else if (preset.name() == "gamma0-11") {
    lhs = log_eta_N(preset.level(), gz, tol) - log_eta_N(preset.level(), z, tol);
    symbol = dedekind_symbol_gamma0(preset.level(), g);
  } else if (preset.name() == "gamma0-37plus") {
    lhs = log_eta_plus(preset.level(), gz, tol) - log_eta_plus(preset.level(), z, tol);
    symbol = dedekind_symbol_plus(preset.level(), g);
  } else {
    throw std::invalid_argument("eta_residual: no eta analogue for '" + preset.name() + "'");
  }
  return lhs - 0.5 * principal_log(g.j_factor(z)) - Cplx(0.0, kPi) * symbol.to_double();
}

std::vector<long long> f11_coefficients_exact(int t_max) {
  if (t_max < 1) throw std::invalid_argument("f11_coefficients_exact: T must be >= 1");
  // Pentagonal-number expansion of prod (1-q^n): exponents k(3k-1)/2, k in Z.
  auto pentagonal = [](long long scale, long long cap) {
    std::vector<std::pair<long long, int>> terms{{0, 1}};
    for (long long k = 1;; ++k) {
      const long long g1 = scale * (k * (3 * k - 1) / 2);
      const long long g2 = scale * (k * (3 * k + 1) / 2);
      const int sign = (k % 2 == 0) ? 1 : -1;
      if (g1 > cap && g2 > cap) break;
      if (g1 <= cap) terms.emplace_back(g1, sign);
      if (g2 <= cap) terms.emplace_back(g2, sign);
    }
    return terms;
  };
  const long long cap = t_max;  // f = q * (...), so powers up to t_max - 1 matter
  const auto p1 = pentagonal(1, cap);
  const auto p11 = pentagonal(11, cap);

  std::vector<long long> acc(static_cast<size_t>(t_max) + 1, 0);  // prod (1-q^n)^2
  for (const auto& [i1, c1] : p1)
    for (const auto& [i2, c2] : p1) {
      const long long e = i1 + i2;
      if (e <= cap) acc[static_cast<size_t>(e)] += static_cast<long long>(c1) * c2;
    }
  auto sparse_multiply = [&](const std::vector<std::pair<long long, int>>& sparse) {
    std::vector<long long> out(acc.size(), 0);
    for (const auto& [e, c] : sparse)
      for (long long i = 0; i + e <= cap; ++i)
        if (acc[static_cast<size_t>(i)] != 0)
          out[static_cast<size_t>(i + e)] += c * acc[static_cast<size_t>(i)];
    acc = std::move(out);
  };
  sparse_multiply(p11);
  sparse_multiply(p11);

  std::vector<long long> a(static_cast<size_t>(t_max) + 1, 0);
  for (int n = 1; n <= t_max; ++n) a[static_cast<size_t>(n)] = acc[static_cast<size_t>(n - 1)];
  return a;
}

QSeries f11_series(int t_max) {
  const auto a = f11_coefficients_exact(t_max);
  QSeries s;
  s.tail = TailPolicy::cusp_form;
  s.coeffs.assign(a.begin(), a.end());
  return s;
}

QSeries e2_difference_series(int t_max) {
  const auto sig = sigma1_table(t_max);
  QSeries s;
  s.tail = TailPolicy::eisenstein2;
  s.coeffs.assign(static_cast<size_t>(t_max) + 1, 0.0);
  s.coeffs[0] = 1.0;
  for (int k = 1; k <= t_max; ++k) {
    double c = static_cast<double>(sig[static_cast<size_t>(k)]);
    if (k % 11 == 0) c -= 11.0 * static_cast<double>(sig[static_cast<size_t>(k / 11)]);
    s.coeffs[static_cast<size_t>(k)] = 2.4 * c;  // 24/10
  }
  return s;
}

namespace {

int series_terms_needed(const QSeries& s, double q_abs, double tol) {
  const int t_have = static_cast<int>(s.coeffs.size()) - 1;
  const double log_q = std::log(q_abs);
  for (int t = 8; t <= t_have; t += std::max(4, t / 16)) {
    double bound = 0.0;
    const double head = std::exp(log_q * (t + 1)) / (1.0 - q_abs);
    switch (s.tail) {
      case TailPolicy::sigma_log:
        bound = 2.0 * head * (1.0 + std::log(double(t)));
        break;
      case TailPolicy::cusp_form:
        bound = 2.0 * head * (t + 1 + 1.0 / (1.0 - q_abs));
        break;
      case TailPolicy::eisenstein2:
        bound = 5.0 * head * (1.0 + std::log(double(t + 1))) * (t + 1 + 1.0 / (1.0 - q_abs)) /
                double(t + 1);
        break;
    }
    if (bound < tol) return t;
  }
  throw std::runtime_error("q-series: convergence budget exceeded");
}

// F(w) = sum_{n=1}^{t} c_n/n e(n w).
Cplx antiderivative_sum(const QSeries& s, Cplx w, int t) {
  const Cplx q = std::exp(Cplx(0.0, 2.0 * kPi) * w);
  Cplx sum = 0.0;
  Cplx qn = 1.0;
  for (int n = 1; n <= t; ++n) {
    qn *= q;
    const double c = s.coeffs[static_cast<size_t>(n)];
    if (c != 0.0) sum += (c / n) * qn;
  }
  return sum;
}

// Base point with Im z0 = Im g z0 = sqrt(e)/|c|.
Cplx symbol_base_point(const ScaledMat& g) {
  const double c = g.c().get_d();
  const double d = g.d().get_d();
  const double root_e = std::sqrt(g.e().get_d());
  return Cplx(-d / c, (c > 0 ? root_e : -root_e) / c);
}

}  // namespace

Cplx modular_symbol(const ScaledMat& g, const QSeries& f, double tol) {
  if (sgn(g.c()) == 0) return 0.0;  // parabolic fixing infinity (or +-I)
  const Cplx z0 = symbol_base_point(g);
  const Cplx z1 = g.moebius(z0);
  const double q_abs = std::exp(-2.0 * kPi * z0.imag());
  const int t = series_terms_needed(f, q_abs, tol / 2.0);
  return antiderivative_sum(f, z1, t) - antiderivative_sum(f, z0, t);
}

double l_value(const QSeries& f, const Int& n, int eps, double tol) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("l_value: eps must be +-1");
  if (eps == 1) return 0.0;
  const double x = std::exp(-2.0 * kPi / std::sqrt(n.get_d()));
  const int t = series_terms_needed(f, x, tol);
  double sum = 0.0;
  double xn = 1.0;
  for (int k = 1; k <= t; ++k) {
    xn *= x;
    sum += f.coeffs[static_cast<size_t>(k)] / k * xn;
  }
  return 2.0 * sum;  // (1 - eps) = 2
}

Cplx e2_period(const ScaledMat& g, double tol) {
  if (!in_gamma0(g, Int(11))) throw std::invalid_argument("e2_period: matrix not in Gamma_0(11)");
  static const QSeries series = e2_difference_series();
  const Cplx two_pi_i(0.0, 2.0 * kPi);
  if (sgn(g.c()) == 0) {
    // z -> z + h moves only the linear term of G.
    const Rat h = Rat(g.b(), g.d());
    return two_pi_i * h.to_double();
  }
  const Cplx z0 = symbol_base_point(g);
  const Cplx z1 = g.moebius(z0);
  const double q_abs = std::exp(-2.0 * kPi * z0.imag());
  const int t = series_terms_needed(series, q_abs, tol / 2.0);
  const Cplx linear = two_pi_i * series.coeffs[0] * (z1 - z0);
  return linear + antiderivative_sum(series, z1, t) - antiderivative_sum(series, z0, t);
}

int omega_float(const ScaledMat& m, const ScaledMat& n) {
  const Cplx z(0.0, 2.0);
  const ScaledMat mn = m * n;
  const Cplx expr = -principal_log(mn.j_factor(z)) + principal_log(m.j_factor(n.moebius(z))) +
                    principal_log(n.j_factor(z));
  const double val = expr.imag() / (2.0 * kPi);
  const double rounded = std::round(val);
  if (std::abs(val - rounded) >= 1e-6)
    throw std::runtime_error("omega_float: value not within 1e-6 of an integer");
  return static_cast<int>(rounded);
}

Cplx log_conj_j_residual(const ScaledMat& m, Cplx z) {
  const Cplx j = m.j_factor(z);
  return principal_log(std::conj(j)) - std::conj(principal_log(j)) -
         Cplx(0.0, 2.0 * kPi) * double(rho(m));
}

}  // namespace mdsym
