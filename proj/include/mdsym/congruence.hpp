#pragma once

#include "mdsym/matrix.hpp"
#include "mdsym/rational.hpp"

namespace mdsym {

/// Modular Dedekind symbol for Gamma_0(N) at the cusp infinity,
///   c != 0:  N(a+d)/(12c) beta_N - sgn(c)/4
///            - sgn(c) alpha_N sum_{v|N} (mu(v)/v) s(d, v|c|/N),
///   c == 0:  N b/(12d) beta_N + (sgn(d)-1)/4.
/// Throws if m is not in Gamma_0(N).
Rat dedekind_symbol_gamma0(const Int& n, const ScaledMat& m);

/// (a b; c d) -> (a -b; -c d); scale unchanged.
ScaledMat iota(const ScaledMat& m);

/// tau_N = (0 -1; N 0) with scale N, i.e. (0, -1/sqrt(N); sqrt(N), 0).
ScaledMat tau_matrix(const Int& n);

/// Fricke conjugation w_N(m) = tau_N m tau_N^{-1} = (d, -c/N; -bN, a).
/// Throws unless m is in Gamma_0(N).
ScaledMat fricke(const Int& n, const ScaledMat& m);

/// Symbol at the cusp 0 (scaling matrix sigma_0 = tau_N):
///   S_0(m) = S_N(w_N(m)) + omega(tau_N^{-1}, w_N(m)) - omega(m, tau_N^{-1}).
Rat dedekind_symbol_gamma0_cusp0(const Int& n, const ScaledMat& m);

/// Symbol relative to a caller-supplied cusp scaling matrix sigma:
///   S_sigma(m) = S(m) + omega(sigma^{-1}, m) - omega(sigma^{-1} m sigma, sigma^{-1}),
/// where S is the cusp-infinity symbol value for m (passed in by the caller).
Rat symbol_at_cusp(const Rat& s_infinity, const ScaledMat& m, const ScaledMat& sigma);

/// Parabolic law: delta * V * h / (4 pi), for gamma conjugate to +(1 h; 0 1)
/// at a cusp of width-volume V = volume_over_pi * pi.
Rat symbol_parabolic(const Rat& volume_over_pi, bool same_cusp, const Int& h);

/// Elliptic law: -(1/r) sum_{k=1}^{r-1} omega(E^k, E). Requires E^r == I
/// (verified by exact multiplication); shared by S and S* at every cusp.
Rat symbol_elliptic(const ScaledMat& elliptic, int order);

/// Atkin-Lehner matrix m_v = (1/sqrt(v)) (av, b; Nc, dv) with adv^2 - Ncb = v.
/// Requires v | N and gcd(v, N/v) = 1. v = N gives tau_N, v = 1 the identity.
ScaledMat atkin_lehner_matrix(const Int& n, const Int& v);

/// Scaling matrix for the cusp 1/v: (1/sqrt(v1)) (v1, b; N, d v1), v1 = N/v,
/// v1 d - v b = 1. Requires v | N and gcd(v, N/v) = 1.
ScaledMat cusp_scaling(const Int& n, const Int& v);

}  // namespace mdsym
