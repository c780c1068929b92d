#pragma once

#include "eisenzeta/numkernel.hpp"

namespace eisenzeta {

// S_r(gamma, delta; kappa, lambda; q), q = e(z) (or qhat = e(-1/z) when dual).
// Every q-power goes through the e(x z) convention.
struct SArgs {
    cplx r;
    double gamma;
    double delta;
    double kappa;
    double lambda;
    cplx z;            // upper half-plane
    bool dual = false; // evaluate at qhat, i.e. replace z by -1/z

    cplx z_effective() const {
        cplx ze = dual ? -1.0 / z : z;
        if (!(ze.imag() > 0.0)) throw std::domain_error("SArgs: z not in upper half-plane");
        return ze;
    }
};

// Single-sum form over l > -delta with the geometric denominator (primary path).
EvalResult s_eval(const SArgs& a, const Truncation& t);

// Brute double sum over (k, l); slow reference path.
EvalResult s_eval_double(const SArgs& a, const Truncation& t);

// Proven bound on the modulus of the tail discarded after L retained l-terms.
double s_tail_bound(const SArgs& a, long long L);

} // namespace eisenzeta
