#pragma once

#include <string>

#include "eisenzeta/numkernel.hpp"

namespace eisenzeta {

struct IdentityReport {
    cplx lhs{0.0, 0.0};
    cplx rhs{0.0, 0.0};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    std::string params;
    std::string route_notes;
};

IdentityReport make_identity_report(cplx lhs, cplx rhs, std::string params,
                                    std::string route_notes = {});

// Ramanujan-type master identity, any integer k (alpha, beta non-integral
// when k = 1); variant applies the (tau, q) -> (1/tau, qhat) form.
IdentityReport ramanujan_check(int k, double alpha, double beta, double mu, double nu,
                               cplx tau, bool variant, const Truncation& t);

// zeta(2k) = (-1)^{k+1} (2 pi)^{2k} B_{2k} / (2 (2k)!)
IdentityReport euler_even(int k, const Truncation& t);

// zeta(2k+1) family with the Lambert sums at q and qhat, k != 0.
IdentityReport ramanujan_odd(int k, cplx tau, const Truncation& t);

// F'(1-k) by the q-form route and by the expansion route; the residual is
// the check (k >= 1; alpha, beta non-integral if k = 1).
IdentityReport fprime_check(int k, double alpha, double beta, double mu, double nu,
                            cplx tau, const Truncation& t);
cplx fprime_route_qform(int k, double alpha, double beta, double mu, double nu, cplx tau,
                        const Truncation& t);
cplx fprime_route_expansion(int k, double alpha, double beta, double mu, double nu, cplx tau,
                            const Truncation& t);

} // namespace eisenzeta
