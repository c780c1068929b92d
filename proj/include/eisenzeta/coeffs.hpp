#pragma once

#include <vector>

#include "eisenzeta/numkernel.hpp"

namespace eisenzeta {

// Taylor coefficients C_k of Z Y~^X e^{XZ} / (Y~^1 e^Z - 1) = sum C_k Z^k / k!.
// The k=0 dichotomy (C_0 = Y~^X when Y~^1 = 1, else 0) is exact: the clean
// case is detected structurally from the stored cover coordinates, never by
// closeness of the projection to 1.
struct CoeffTable {
    std::vector<cplx> entries; // C_0 .. C_K
    cplx X;
    double y_modulus;
    double y_argument;
    int K;
    // |Y~^1 - 1| < 1e-13 without being exactly 1: the dichotomy is
    // ill-conditioned here; flagged, never interpolated.
    bool near_resonant = false;

    cplx operator[](int k) const { return entries.at(static_cast<size_t>(k)); }
};

// True iff Y~^1 = 1 exactly: unit modulus and argument an exact floating
// multiple of the stored two_pi constant (cover_e(integer) lands here).
bool cover_projects_to_one(const CoverPoint& y);

CoeffTable coeff_C(int K, cplx X, const CoverPoint& Y);

// A_k(Y) = C_k(0, Y~) for any cover point over Y; Y = 1 takes the Bernoulli
// branch.
std::vector<cplx> coeff_A(int K, cplx Y);

// Bernoulli numbers B_0..B_K as doubles rounded from the exact rational
// recurrence.
std::vector<double> bernoulli_numbers(int K);

// B_k(X) by binomial expansion.
cplx bernoulli_poly(int k, cplx X);

// n-choose-k rounded from the exact integer value (exceeds 2^53 for k ~ 60).
double binomial(int n, int k);

} // namespace eisenzeta
