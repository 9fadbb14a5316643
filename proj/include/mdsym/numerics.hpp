#pragma once

#include <complex>
#include <vector>

#include "mdsym/matrix.hpp"
#include "mdsym/words.hpp"

namespace mdsym {

using Cplx = std::complex<double>;

/// Documented tail-bound policies for truncated q-expansions.
enum class TailPolicy {
  sigma_log,     // |c_k| <= sigma_{-1}(k) <= 1 + ln k   (eta logarithm)
  cusp_form,     // |c_n| <= 2n                          (weight-2 newforms here)
  eisenstein2,   // |c_n| <= 5 n (1 + ln n)              (weight-2 Eisenstein data)
};

/// Truncated q-expansion c_0 + c_1 q + ... + c_T q^T with a tail-bound
/// policy that certifies the truncation error at the evaluation point.
struct QSeries {
  std::vector<double> coeffs;  // c_0 .. c_T
  TailPolicy tail = TailPolicy::cusp_form;
};

/// log eta(z) = pi i z/12 - sum_{k<=T} sigma_{-1}(k) e(kz), T adaptive so the
/// geometric tail bound 2|q|^{T+1}(1+ln T)/(1-|q|) is below tol.
/// Throws std::invalid_argument for Im z <= 0, std::runtime_error if the
/// term budget cannot reach tol.
Cplx log_eta(Cplx z, double tol);

/// log eta_N(z) = alpha_N sum_{v|N} (v/N) mu(N/v) log eta(v z).
Cplx log_eta_N(const Int& n, Cplx z, double tol);

/// log eta_N^+(z) = 2^{-r} sum_{v|N} log eta(v z), squarefree N.
Cplx log_eta_plus(const Int& n, Cplx z, double tol);

/// Transformation residual log eta_.(gz) - log eta_.(z) - Log j(g,z)/2
/// - pi i S_.(g) for the preset's eta analogue and exact symbol; ~0 when the
/// transformation law holds. Dispatches on preset name (sl2z, gamma0-11,
/// gamma0-37plus).
Cplx eta_residual(const GroupPreset& preset, const ScaledMat& g, Cplx z, double tol);

/// Integer q-expansion of eta(z)^2 eta(11z)^2 = q prod (1-q^n)^2 (1-q^{11n})^2
/// up to q^T, computed by exact integer convolution of pentagonal series.
/// Index n holds a(n); a(0) = 0.
std::vector<long long> f11_coefficients_exact(int t_max);

/// Same coefficients cast to a QSeries (cusp_form tail policy).
QSeries f11_series(int t_max = 20000);

/// Coefficients of the weight-2 form -(1/10)(E_2(z) - 11 E_2(11z)) with
/// constant term 1, E_2 = 1 - 24 sum sigma_1(n) q^n.
QSeries e2_difference_series(int t_max = 20000);

/// Period data for the weight-2 form on Gamma_0(37)^+ (q-expansion
/// q - 2q^2 - 3q^3 + 2q^4 - 2q^5 + 6q^6 - q^7 + 6q^9 + ...): the real and
/// imaginary periods of the curve y^2 = 4x^3 - 4x + 1, with Petersson norm
/// ||f||^2 = omega_1 omega_2 / (4 pi^2 i). Shipped as documented constants;
/// numeric modular symbols for this form are not computed here (that would
/// need Hecke-eigenform machinery to extend the known coefficients).
inline constexpr double kPeriod37Plus1 = 2.993458644;       // omega_1
inline constexpr double kPeriod37Plus2Imag = 2.451389381;   // omega_2 / i

/// Modular symbol <g, f> = F(g z0) - F(z0) with F(w) = sum a(n)/n e(nw) and
/// base point z0 = (-d + i sgn(c) sqrt(e))/c, so Im z0 = Im g z0. Parabolic
/// g with c = 0 gives 0. Throws std::runtime_error when the series is too
/// short for the requested tolerance ("convergence budget exceeded").
Cplx modular_symbol(const ScaledMat& g, const QSeries& f, double tol = 1e-9);

/// L(1,f) = (1 - eps) sum_{n<=T} a(n)/n exp(-2 pi n/sqrt(N)) for a level-N
/// form with Fricke eigenvalue eps in {+1,-1}.
double l_value(const QSeries& f, const Int& n, int eps, double tol = 1e-12);

/// Period <g, E_{inf,2} - E_{0,2}> over Gamma_0(11), via the antiderivative
/// G(w) = 2 pi i c_0 w + sum c_n/n e(nw) of the series above.
Cplx e2_period(const ScaledMat& g, double tol = 1e-9);

/// Phase factor from the analytic definition at z = 2i, rounded to the
/// nearest integer; throws std::runtime_error if the value is farther than
/// 1e-6 from an integer.
int omega_float(const ScaledMat& m, const ScaledMat& n);

/// Log(conj j(M,z)) - conj(Log j(M,z)) - 2 pi i rho(M); ~0 identically.
Cplx log_conj_j_residual(const ScaledMat& m, Cplx z);

}  // namespace mdsym
