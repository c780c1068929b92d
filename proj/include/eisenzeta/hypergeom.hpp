#pragma once

#include "eisenzeta/numkernel.hpp"

namespace eisenzeta {

// Upper incomplete gamma Gamma(a, Z), |arg Z| < pi. Continued fraction for
// large |Z|, ascending series against Gamma(a) otherwise; a at or near
// non-positive integers goes through the downward recurrence from E_1.
EvalResult upper_incomplete_gamma(cplx a, cplx Z, const Truncation& t);

// Scaled form e^Z Z^{-a} Gamma(a, Z) via the Lentz continued fraction.
// Valid for |arg Z| < pi with |Z| not small against |a|; *cf_err reports the
// last correction magnitude. Used wherever e^Z would overflow.
cplx incomplete_gamma_cf_scaled(cplx a, cplx Z, double tol, double* cf_err);

// Kummer U(a; c; Z) in the supported shapes: c = a+1 (closed form Z^{-a}),
// c = a (incomplete-gamma reduction), otherwise unsupported.
EvalResult kummer_u(cplx a, cplx c, cplx Z, const Truncation& t);

// Oracle mode: direct quadrature of the (rotated) real-ray integral
// representation; Re a > 0, |arg Z| < pi.
EvalResult kummer_u_quadrature(cplx a, cplx c, cplx Z, const Truncation& t);

// F_{s,J}(Z) = U(s+J; s+J; Z) on the cover, |arg Z| < 3 pi/2 (argument
// carried explicitly by the CoverPoint).
EvalResult f_sJ(cplx s, int J, const CoverPoint& Z, const Truncation& t);

// 1F1(a; c; Z) by the ascending series, |Z| <= 50 regime.
EvalResult kummer_1f1(cplx a, cplx c, cplx Z, const Truncation& t);

} // namespace eisenzeta
