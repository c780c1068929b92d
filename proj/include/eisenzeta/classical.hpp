#pragma once

#include <array>

#include "eisenzeta/numkernel.hpp"

namespace eisenzeta {

// w = alpha + beta z with periods (1, z), z in the upper half-plane.
struct LatticePoint {
    double alpha;
    double beta;
    cplx z;

    cplx w() const { return cplx{alpha, 0.0} + beta * z; }
};

// a_{2k}: zeta(1-2k) for k != 0, 2 zeta'(0) = -log(2 pi) for k = 0.
double eisenstein_a(int k, const Truncation& t);

// E_{2k}(z) = 1 + (2/a_{2k}) sum l^{2k-1} q^l/(1-q^l); weight2k must be even.
EvalResult eisenstein_E(int weight2k, cplx z, const Truncation& t);

struct IdentityPair {
    cplx lhs;
    cplx rhs;
    double abs_residual() const { return std::abs(lhs - rhs); }
    double rel_residual() const {
        return abs_residual() / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    }
};

// weight-2k transformation law with the inhomogeneous Bernoulli correction
// (pure modularity when the correction is empty).
IdentityPair quasimodular_check(int weight2k, cplx z, const Truncation& t);

enum class WpRoute { qform, lattice };

// Weierstrass P: q-form corollary (production) or lattice sum (slow oracle).
EvalResult wp(const LatticePoint& pt, WpRoute route, const Truncation& t, int radius = 1500);

struct EInvariants {
    cplx e1, e2, e3;
};
EInvariants invariants_e(cplx z, const Truncation& t);

// Weierstrass zeta by the q-form corollary; (alpha, beta) in (-1,1)^2 \ {0}.
EvalResult wzeta(const LatticePoint& pt, const Truncation& t);

struct EtaInvariants {
    cplx eta1, eta2, eta3;
};
EtaInvariants eta_invariants(cplx z, const Truncation& t);

// eta1 z/2 - eta2/2, eta2 (-(1+z)/2) - eta3 z/2, eta3/2 - eta1 (-(1+z)/2);
// each should equal pi i / 2.
std::array<cplx, 3> legendre_values(cplx z, const Truncation& t);

struct SigmaForms {
    cplx log_form;     // E_2 quadratic + S_1 sums
    cplx product_form; // q-Pochhammer products
};
SigmaForms wsigma(const LatticePoint& pt, const Truncation& t);

// d/ds F(s;0,0;0,0;y) at s = 0 (weight-0 derivative value, Section-8 shape);
// backs the weight-0 leg of the E_{2k} dual-route checks.
cplx fprime_weight0(cplx y, const Truncation& t);

} // namespace eisenzeta
