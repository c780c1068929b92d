#pragma once

#include "eisenzeta/numkernel.hpp"

namespace eisenzeta {

// Complex gamma (Lanczos, reflection for Re s < 1/2). Relative error is a
// few 1e-14 on the |s| <= 50 band. Poles raise pole_error.
cplx gamma_fn(cplx s);

// 1/Gamma, total; exactly 0 at non-positive integers (bit-exact test).
cplx reciprocal_gamma(cplx s);

// (1/Gamma)'(-h) = (-1)^h h!
double reciprocal_gamma_deriv(int h);

// (s)_n = Gamma(s+n)/Gamma(s), productwise, |n| <= 64; (s)_{-1} = 1/(s-1).
cplx pochhammer(cplx s, int n);

struct LerchArgs {
    cplx r;
    double gamma;
    double kappa;
};

// psi(r, gamma, kappa) = sum over gamma+k > 0 of e((gamma+k) kappa) (gamma+k)^{-r},
// continued to the whole r-plane except the pole at r = 1 with kappa integral.
EvalResult psi_lerch(const LerchArgs& a, const Truncation& t);

// Hurwitz zeta(r, a), a > 0, Euler-Maclaurin with shift. Pole at r = 1.
EvalResult hurwitz_zeta(cplx r, double a, const Truncation& t);

// zeta_kappa(r) = sum_{k>=1} e(k kappa) k^{-r}: the gamma-integral reduction.
EvalResult exp_zeta(cplx r, double kappa, const Truncation& t);

// psi_Z^{+/-}(r, gamma, kappa) via e^{-/+ pi i r} psi(r,-gamma,-kappa) + psi(r,gamma,kappa).
EvalResult psi_bilateral(cplx r, double gamma, double kappa, Branch b, const Truncation& t);

// Cross-check route: e(gamma kappa) (2 pi)^r / Gamma(r) e^{-/+ pi i r/2} psi(1-r, -/+kappa, +/-gamma).
EvalResult psi_bilateral_fe(cplx r, double gamma, double kappa, Branch b, const Truncation& t);

// psi(-j, gamma, kappa) = -C_{j+1}(<gamma>, e~(kappa))/(j+1) - delta_{j0} delta(gamma).
cplx psi_special(int j, double gamma, double kappa);

// Res_{r=1} psi(r, gamma, kappa) = C_0(<gamma>, e~(kappa)).
cplx psi_residue_at_1(double gamma, double kappa);

} // namespace eisenzeta
