#include <doctest.h>

#include "eisenzeta/identities.hpp"
#include "eisenzeta/coeffs.hpp"
#include "eisenzeta/lerch.hpp"

using namespace eisenzeta;

namespace {
const Truncation tr{};

// residual against the natural identity scale; several grid points sit at
// lattice-symmetric parameters where both sides vanish identically
bool residual_ok(const IdentityReport& rep, double tol) {
    return rep.abs_residual <= tol * std::max({std::abs(rep.lhs), std::abs(rep.rhs), 1.0});
}
}

TEST_CASE("euler-2-32: even zeta values") {
    for (int k = 1; k <= 10; ++k) {
        const IdentityReport rep = euler_even(k, tr);
        CHECK(rep.rel_residual <= 1e-12);
    }
    CHECK(std::abs(euler_even(1, tr).rhs - pi * pi / 6.0) < 1e-14);
    CHECK(std::abs(euler_even(2, tr).rhs - std::pow(pi, 4) / 90.0) < 1e-13);
    CHECK_THROWS_AS(euler_even(0, tr), std::domain_error);
}

TEST_CASE("ramanujan-2-33: odd zeta values") {
    // k = 1, tau = 1: the classical zeta(3) relation
    CHECK(ramanujan_odd(1, {1.0, 0.0}, tr).rel_residual <= 1e-11);
    for (int k : {-2, 2}) {
        for (cplx tau : {cplx{1.0, 0.0}, std::polar(1.0, pi / 6)}) {
            CHECK(residual_ok(ramanujan_odd(k, tau, tr), 1e-10));
        }
    }
    // zeta(-3) = 1/120 enters the k = -2 case through the Bernoulli closed form
    CHECK(std::abs(-bernoulli_numbers(4)[4] / 4.0 - 1.0 / 120.0) == 0.0);
    CHECK_THROWS_AS(ramanujan_odd(0, {1.0, 0.0}, tr), std::domain_error);
}

TEST_CASE("ramanujan-2-31 family across k, parameters, tau") {
    const double tuples[3][4] = {
        {0.0, 0.0, 0.0, 0.0}, {0.3, 0.7, 0.1, 0.2}, {0.5, 0.5, 0.5, 0.5}};
    for (int k : {-3, -2, -1, 0, 2, 3}) {
        for (const auto& q : tuples) {
            for (cplx tau : {cplx{1.0, 0.0}, std::polar(1.0, pi / 6)}) {
                const IdentityReport rep =
                    ramanujan_check(k, q[0], q[1], q[2], q[3], tau, false, tr);
                CHECK(residual_ok(rep, 1e-9));
            }
        }
    }
    // k = 1 needs non-integral alpha, beta
    const IdentityReport k1 = ramanujan_check(1, 0.3, 0.7, 0.1, 0.2, {1.0, 0.0}, false, tr);
    CHECK(k1.rel_residual <= 1e-9);
    CHECK_THROWS_AS(ramanujan_check(1, 0.0, 0.7, 0.1, 0.2, {1.0, 0.0}, false, tr),
                    std::domain_error);
}

TEST_CASE("specializations reproduce the corollary pairings") {
    // (mu, nu) = 0: exponential-zeta pairing (Corollary 4.1)
    CHECK(ramanujan_check(2, 0.3, 0.7, 0.0, 0.0, {1.0, 0.0}, false, tr).rel_residual <=
          1e-10);
    // (alpha, beta) = 0: Hurwitz pairing with the A_j coefficients
    CHECK(ramanujan_check(2, 0.0, 0.0, 0.1, 0.2, {1.0, 0.0}, false, tr).rel_residual <=
          1e-10);
    // (beta, nu) = 0 and (alpha, nu) = 0 pairings
    CHECK(ramanujan_check(2, 0.3, 0.0, 0.1, 0.0, {1.0, 0.0}, false, tr).rel_residual <=
          1e-10);
    CHECK(ramanujan_check(2, 0.0, 0.7, 0.1, 0.0, {1.0, 0.0}, false, tr).rel_residual <=
          1e-10);
    // k = -1 at zeros: the Weierstrass-adjacent S_{-1} identity
    CHECK(ramanujan_check(-1, 0.0, 0.0, 0.0, 0.0, {1.0, 0.0}, false, tr).rel_residual <=
          1e-10);
}

TEST_CASE("variant display is consistent under tau <-> 1/tau") {
    for (cplx tau : {cplx{1.3, 0.2}, std::polar(0.8, -pi / 5)}) {
        const IdentityReport var =
            ramanujan_check(2, 0.3, 0.7, 0.1, 0.2, tau, true, tr);
        CHECK(var.rel_residual <= 1e-10);
        const IdentityReport prim =
            ramanujan_check(2, 0.3, 0.7, 0.1, 0.2, 1.0 / tau, false, tr);
        CHECK(prim.rel_residual <= 1e-10);
    }
}

TEST_CASE("fprime dual routes: q-form vs expansion form") {
    CHECK(fprime_check(2, 0.3, 0.7, 0.1, 0.2, {1.0, 0.0}, tr).rel_residual <= 1e-8);
    CHECK(fprime_check(3, 0.0, 0.0, 0.0, 0.0, {1.0, 0.0}, tr).rel_residual <= 1e-8);
    CHECK(fprime_check(1, 0.3, 0.7, 0.1, 0.2, {1.0, 0.0}, tr).rel_residual <= 1e-8);
    CHECK(fprime_check(4, 0.3, 0.7, 0.1, 0.2, std::polar(1.0, 0.4), tr).rel_residual <=
          1e-8);
    CHECK_THROWS_AS(fprime_check(1, 1.0, 0.7, 0.0, 0.0, {1.0, 0.0}, tr), std::domain_error);
    CHECK_THROWS_AS(fprime_check(0, 0.3, 0.7, 0.0, 0.0, {1.0, 0.0}, tr), std::domain_error);
}

TEST_CASE("report residual bookkeeping") {
    const IdentityReport rep = make_identity_report({3.0, 4.0}, {3.0, 4.0 + 1e-8}, "x");
    CHECK(rep.abs_residual == doctest::Approx(1e-8).epsilon(1e-6));
    CHECK(rep.rel_residual == doctest::Approx(1e-8 / 5.0).epsilon(1e-6));
}
