#pragma once

#include "eisenzeta/numkernel.hpp"

namespace eisenzeta {

// (s; alpha, beta; mu, nu; tau) with z = i tau, |arg tau| < pi/2.
struct EisensteinParams {
    cplx s;
    double alpha = 0.0;
    double beta = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    cplx tau{1.0, 0.0};

    cplx z() const { return z_from_tau(tau); }
    cplx q() const { return q_from_z(z()); }
    cplx qhat() const { return qhat_from_z(z()); }
    int epsilon_tau() const { return std::arg(tau) > 0 ? 1 : (std::arg(tau) < 0 ? -1 : 0); }
};

struct ExpansionOrder {
    int J = 1;
    int K = 0;
};

// Brute lattice oracle over |m|, |n| <= radius; sigma >= 4. The minus branch
// and the mean come from the plus pass plus the negative-real-axis row.
struct BruteResult {
    EvalResult plus;
    EvalResult minus;
    EvalResult mean;
};
BruteResult f_brute(const EisensteinParams& p, int radius);
EvalResult f_brute_branch(const EisensteinParams& p, Branch b, int radius);

// A(s,alpha,mu), B1(s,alpha,mu), B2(s,beta,nu); functional_form selects the
// second (functional-equation) expressions; automatic choice uses them for
// Re s >= 1.
cplx abc_A(const EisensteinParams& p, const Truncation& t, bool functional_form);
cplx abc_B1(const EisensteinParams& p, const Truncation& t, bool functional_form);
cplx abc_B2(const EisensteinParams& p, const Truncation& t, bool functional_form);
struct AbcCoeffs {
    cplx A, B1, B2;
};
AbcCoeffs abc_coeffs(const EisensteinParams& p, const Truncation& t);

// Exact q-series evaluation (valid for every s; the q-series side vanishes
// with 1/Gamma(s) at non-positive integers).
EvalResult f_qform(const EisensteinParams& p, const Truncation& t);

// main = delta(beta) B1 + delta(alpha) B2 tau^{-s}; series = the j-sum up to J-1.
struct AsymptoticSJ {
    cplx main;
    cplx series;
};
AsymptoticSJ asymptotic_SJ(const EisensteinParams& p, const ExpansionOrder& o,
                           const Truncation& t);

// R_J = f_qform - main - series (the reference remainder, exact by construction).
EvalResult remainder_subtraction(const EisensteinParams& p, const ExpansionOrder& o,
                                 const Truncation& t);

// R_J by numerical Mellin-Barnes quadrature along Re w = u_J (cross-check).
EvalResult remainder_mellin_barnes(const EisensteinParams& p, const ExpansionOrder& o,
                                   const Truncation& t);
EvalResult remainder_mellin_barnes_at(const EisensteinParams& p, const ExpansionOrder& o,
                                      double u_abscissa, const Truncation& t);

// Exponentially improved remainder: qhat q-series part, the S*_J Kummer sum,
// its K-term asymptotic series and the residual r* = S*_J - S*_{J,K}.
struct RefinedRemainder {
    cplx qhat_part;
    cplx sstar_part;   // prefactored S*_J contribution to R_J
    cplx sstar;        // S*_J itself
    cplx sstar_series; // S*_{J,K}
    EvalResult rstar;  // S*_J - S*_{J,K}, O(|tau|^{sigma+J+K})
};
RefinedRemainder remainder_refined(const EisensteinParams& p, const ExpansionOrder& o,
                                   const Truncation& t);

} // namespace eisenzeta
