#include <doctest.h>

#include <functional>

#include "eisenzeta/classical.hpp"
#include "eisenzeta/eisenstein.hpp"
#include "eisenzeta/identities.hpp"

using namespace eisenzeta;

namespace {

const Truncation tr{};

double rel(cplx a, cplx b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

cplx ipow(cplx b, int n) {
    if (n < 0) return 1.0 / ipow(b, -n);
    cplx r{1.0, 0.0};
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// composite Simpson along the segment t in [t0, 1] of f(t w) w dt
cplx segment_integral(const std::function<cplx(double)>& f, double t0, int n = 4000) {
    KahanSum acc;
    const double h = (1.0 - t0) / n;
    for (int i = 0; i < n; ++i) {
        const double a = t0 + i * h;
        acc.add(f(a) + 4.0 * f(a + 0.5 * h) + f(a + h));
    }
    return acc.total() * h / 6.0;
}

} // namespace

TEST_CASE("Lambert series basics: a_2 = -1/12 and E_2k -> 1 as q -> 0") {
    CHECK(eisenstein_a(1, tr) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
    CHECK(eisenstein_a(0, tr) == doctest::Approx(-std::log(two_pi)).epsilon(1e-15));
    CHECK(rel(eisenstein_E(4, {0.0, 40.0}, tr).value, cplx{1.0, 0.0}) < 1e-14);
}

TEST_CASE("E_2(i) = 3/pi") {
    CHECK(rel(eisenstein_E(2, {0.0, 1.0}, tr).value, cplx{3.0 / pi, 0.0}) < 1e-10);
}

TEST_CASE("dual route: E_{2k} from the Lambert series vs F and F'") {
    for (cplx z : {cplx{0.0, 1.0}, cplx{0.5, 1.0}}) {
        const cplx tau = tau_from_z(z);
        for (int k : {-2, -1, 0, 1, 2, 3}) {
            const double a2k = eisenstein_a(k, tr);
            const cplx lambert = eisenstein_E(2 * k, z, tr).value;
            cplx other;
            if (k >= 1) {
                EisensteinParams p{cplx(2.0 * k, 0.0), 0.0, 0.0, 0.0, 0.0, tau};
                other = std::tgamma(2.0 * k) / (ipow(two_pi * iunit, 2 * k) * a2k) *
                        f_qform(p, tr).value;
            } else if (k == 0) {
                other = fprime_weight0(z, tr) / a2k;
            } else {
                // negative weights go through the expansion form of F'(2k)
                const cplx fp = fprime_route_expansion(1 - 2 * k, 0.0, 0.0, 0.0, 0.0, tau, tr);
                other = ipow(two_pi * iunit, -2 * k) / (std::tgamma(1.0 - 2.0 * k) * a2k) * fp;
            }
            // E_6 vanishes at z = i: compare with the natural E-scale floor
            CHECK(std::abs(lambert - other) <=
                  1e-8 * std::max({std::abs(lambert), std::abs(other), 1.0}));
        }
    }
}

TEST_CASE("quasi-modularity law for weights -4..6") {
    for (cplx z : {cplx{0.0, 1.0}, cplx{0.5, 1.0}}) {
        for (int k = -2; k <= 3; ++k) {
            const IdentityPair pair = quasimodular_check(2 * k, z, tr);
            // E_6 vanishes at z = i: keep an absolute floor of the E-scale 1
            CHECK(pair.abs_residual() <=
                  1e-9 * std::max({std::abs(pair.lhs), std::abs(pair.rhs), 1.0}));
        }
    }
}

TEST_CASE("weight 4 at z = i is purely modular") {
    const IdentityPair pair = quasimodular_check(4, {0.0, 1.0}, tr);
    CHECK(pair.rel_residual() <= 1e-10);
    CHECK(rel(pair.lhs, pair.rhs) <= 1e-10);
}

TEST_CASE("weight 0 at z = 2i carries the log term") {
    const IdentityPair pair = quasimodular_check(0, {0.0, 2.0}, tr);
    CHECK(pair.rel_residual() <= 1e-9);
}

TEST_CASE("wp: q-form vs the slow lattice oracle") {
    const LatticePoint pt{0.3, 0.4, {0.0, 1.0}};
    const EvalResult qform = wp(pt, WpRoute::qform, tr);
    const EvalResult lattice = wp(pt, WpRoute::lattice, tr, 1500);
    CHECK(std::abs(qform.value - lattice.value) <= 5e-4);
}

TEST_CASE("wp evenness through the q-form route") {
    const LatticePoint pt{0.3, 0.4, {0.0, 2.0}};
    const LatticePoint mpt{-0.3, -0.4, {0.0, 2.0}};
    CHECK(rel(wp(pt, WpRoute::qform, tr).value, wp(mpt, WpRoute::qform, tr).value) < 1e-10);
    CHECK_THROWS_AS(wp({1.0, 0.0, {0.0, 1.0}}, WpRoute::qform, tr), std::domain_error);
}

TEST_CASE("invariants: sum rule, half-period values, base change") {
    for (cplx z : {cplx{0.0, 1.0}, cplx{0.0, 2.0}, cplx{0.5, 1.0}}) {
        const EInvariants e = invariants_e(z, tr);
        CHECK(std::abs(e.e1 + e.e2 + e.e3) <=
              1e-11 * std::max(1.0, std::abs(e.e1) + std::abs(e.e2)));
    }

    const cplx z{0.0, 1.0};
    const EInvariants e = invariants_e(z, tr);
    CHECK(rel(e.e1, wp({0.5, 0.0, z}, WpRoute::qform, tr).value) < 1e-9);
    CHECK(rel(e.e2, wp({0.0, 0.5, z}, WpRoute::qform, tr).value) < 1e-9);
    CHECK(std::abs(e.e3) < 1e-11 * std::abs(e.e1)); // square lattice symmetry
    CHECK(std::abs(wp({0.5, 0.5, z}, WpRoute::qform, tr).value - e.e3) <
          1e-9 * std::abs(e.e1));

    const cplx zb{1.0 / 3.0, 1.0};
    const EInvariants ez = invariants_e(zb, tr);
    const EInvariants ezhat = invariants_e(-1.0 / zb, tr);
    const cplx z2 = zb * zb;
    CHECK(rel(ezhat.e1, z2 * ez.e2) < 1e-10);
    CHECK(rel(ezhat.e2, z2 * ez.e1) < 1e-10);
    CHECK(rel(ezhat.e3, z2 * ez.e3) < 1e-10);
}

TEST_CASE("wp base change to the dual periods on the q-form route") {
    const cplx z{0.5, 1.0};
    const LatticePoint pt{0.3, 0.4, z};
    // w/z in the (1, -1/z) basis has coordinates (beta, -alpha)
    const LatticePoint dual{0.4, -0.3, -1.0 / z};
    CHECK(rel(wp(dual, WpRoute::qform, tr).value, z * z * wp(pt, WpRoute::qform, tr).value) <
          1e-9);
}

TEST_CASE("weierstrass zeta: legendre relations") {
    for (cplx z : {cplx{0.0, 1.0}, cplx{0.0, 2.0}}) {
        for (cplx v : legendre_values(z, tr)) {
            CHECK(std::abs(v - iunit * pi / 2.0) <= 1e-12);
        }
    }
}

TEST_CASE("weierstrass zeta: oddness and half-period values") {
    const cplx z{0.0, 2.0};
    const cplx a = wzeta({0.3, 0.4, z}, tr).value;
    const cplx b = wzeta({-0.3, -0.4, z}, tr).value;
    CHECK(rel(a, -b) < 1e-10);

    const EtaInvariants eta = eta_invariants(z, tr);
    CHECK(rel(wzeta({0.5, 0.0, z}, tr).value, eta.eta1) < 1e-11);
    CHECK(rel(wzeta({0.0, 0.5, z}, tr).value, eta.eta2) < 1e-11);
}

TEST_CASE("weierstrass zeta against the integral of wp") {
    const LatticePoint pt{0.3, 0.2, {0.0, 1.0}};
    const cplx w = pt.w();
    const double eps = 1e-3;
    auto f = [&](double t) {
        const cplx u = t * w;
        return (wp({t * pt.alpha, t * pt.beta, pt.z}, WpRoute::qform, tr).value -
                1.0 / (u * u)) *
               w;
    };
    const cplx oracle = 1.0 / w - segment_integral(f, eps);
    CHECK(std::abs(wzeta(pt, tr).value - oracle) <= 1e-6);
}

TEST_CASE("weierstrass sigma: log and product forms") {
    const LatticePoint pt{0.3, 0.4, {0.0, 1.0}};
    const SigmaForms sf = wsigma(pt, tr);
    CHECK(rel(std::exp(sf.log_form), sf.product_form) <= 1e-9);

    // oddness through the product form
    const SigmaForms sm = wsigma({-0.25, -0.25, {0.0, 2.0}}, tr);
    const SigmaForms sp = wsigma({0.25, 0.25, {0.0, 2.0}}, tr);
    CHECK(rel(sm.product_form, -sp.product_form) < 1e-10);
}

TEST_CASE("sigma(w)/w -> 1 for small w") {
    const double eps = 1e-3;
    const LatticePoint pt{0.3 * eps, 0.4 * eps, {0.0, 1.0}};
    const SigmaForms sf = wsigma(pt, tr);
    CHECK(std::abs(sf.product_form / pt.w() - 1.0) <= 1e-2);
}

TEST_CASE("weierstrass sigma against the integral of zeta") {
    const LatticePoint pt{0.3, 0.2, {0.0, 1.0}};
    const cplx w = pt.w();
    // zeta(u) - 1/u = O(u^3): the skipped [0, eps w] piece is O(eps^4)
    const double eps = 1e-2;
    auto f = [&](double t) {
        const cplx u = t * w;
        return (wzeta({t * pt.alpha, t * pt.beta, pt.z}, tr).value - 1.0 / u) * w;
    };
    const cplx log_oracle = std::log(w) + segment_integral(f, eps, 2000);
    const SigmaForms sf = wsigma(pt, tr);
    CHECK(std::abs(std::exp(log_oracle) - sf.product_form) <=
          1e-6 * std::abs(sf.product_form));
}

TEST_CASE("windows and domain errors") {
    CHECK_THROWS_AS(wzeta({1.5, 0.0, {0.0, 1.0}}, tr), std::domain_error);
    CHECK_THROWS_AS(wsigma({0.0, 0.0, {0.0, 1.0}}, tr), std::domain_error);
    CHECK_THROWS_AS(eisenstein_E(3, {0.0, 1.0}, tr), std::domain_error);
}
