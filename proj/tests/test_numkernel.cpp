#include <doctest.h>

#include <random>

#include "eisenzeta/numkernel.hpp"

using namespace eisenzeta;

namespace {
double rel(cplx a, cplx b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}
} // namespace

TEST_CASE("e_of basic values") {
    CHECK(std::abs(e_of(0.0) - cplx{1.0, 0.0}) == 0.0);
    CHECK(std::abs(e_of(0.5) - cplx{-1.0, 0.0}) < 1e-15);
    // e(i) = e^{-2 pi}, cross-checked against a high-precision exp value
    CHECK(rel(e_of(cplx{0.0, 1.0}), cplx{1.8674427317079888e-3, 0.0}) < 1e-13);
}

TEST_CASE("frac_parts convention") {
    auto f0 = frac_parts(0.0);
    CHECK(f0.frac == 0.0);
    CHECK(f0.frac_prime == 1.0);
    CHECK(f0.is_int);

    auto f1 = frac_parts(2.25);
    CHECK(f1.frac == doctest::Approx(0.25));
    CHECK(f1.frac_prime == doctest::Approx(0.25));
    CHECK_FALSE(f1.is_int);

    auto f2 = frac_parts(-0.25);
    CHECK(f2.frac == doctest::Approx(0.75));
    CHECK(f2.frac_prime == doctest::Approx(0.75));
    CHECK_FALSE(f2.is_int);
}

TEST_CASE("frac_prime(x) = 1 - frac(-x) exactly on a large random sample") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> d(-1e6, 1e6);
    for (int i = 0; i < 1000000; ++i) {
        const double x = d(rng);
        CHECK(frac_parts(x).frac_prime == 1.0 - frac_parts(-x).frac);
    }
    for (double x : {0.0, 1.0, -3.0, 17.0}) {
        CHECK(frac_parts(x).frac_prime == 1.0 - frac_parts(-x).frac);
    }
}

TEST_CASE("cover_pow on e~(kappa) picks the cover sheet, not the principal one") {
    // e~(1)^{1/2} = e(1/2) = -1, not +1
    CHECK(rel(cover_pow(cover_e(1.0), cplx{0.5, 0.0}), cplx{-1.0, 0.0}) < 1e-14);
    CHECK(rel(cover_pow(cover_one(), cplx{3.7, -1.2}), cplx{1.0, 0.0}) < 1e-15);
    CHECK(rel(cover_pow(CoverPoint{std::exp(1.0), 0.0}, cplx{0.0, pi}), cplx{-1.0, 0.0}) <
          1e-14);
}

TEST_CASE("cover_pow additivity in the exponent") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dm(-3.0, 3.0), da(-8.0 * pi, 8.0 * pi),
        dx(-5.0, 5.0);
    for (int i = 0; i < 500; ++i) {
        CoverPoint y{std::pow(10.0, dm(rng)), da(rng)};
        cplx x1{dx(rng), dx(rng)}, x2{dx(rng), dx(rng)};
        const cplx lhs = cover_pow(y, x1 + x2);
        const cplx rhs = cover_pow(y, x1) * cover_pow(y, x2);
        CHECK(rel(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("branch_pow boundary behaviour") {
    CHECK(rel(branch_pow({-1.0, 0.0}, {0.5, 0.0}, Branch::plus), iunit) < 1e-15);
    CHECK(rel(branch_pow({-1.0, 0.0}, {0.5, 0.0}, Branch::minus), -iunit) < 1e-15);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const cplx s{d(rng), d(rng)};
        // branches agree off the cut
        const cplx base{2.0, 0.0};
        CHECK(branch_pow(base, s, Branch::plus) == branch_pow(base, s, Branch::minus));
        // plus equals the principal power everywhere
        cplx b{d(rng), d(rng)};
        if (std::abs(b) < 1e-3) continue;
        CHECK(rel(branch_pow(b, s, Branch::plus), std::pow(b, s)) < 1e-12);
        // on the cut the two branches of base^s differ by exactly e(-s)
        const cplx neg{-1.0 - std::abs(d(rng)), 0.0};
        CHECK(rel(branch_pow(neg, s, Branch::minus),
                  branch_pow(neg, s, Branch::plus) * e_of(-s)) < 1e-12);
    }
    CHECK_THROWS_AS(branch_pow({0.0, 0.0}, {1.0, 0.0}, Branch::plus), std::domain_error);
}

TEST_CASE("tau and z conversions with the q conventions") {
    CHECK(rel(tau_from_z(cplx{0.0, 1.0}), cplx{1.0, 0.0}) < 1e-15);
    CHECK(rel(q_from_z(cplx{0.0, 1.0}), cplx{std::exp(-two_pi), 0.0}) < 1e-14);

    const cplx tau = std::polar(1.0, pi / 4);
    CHECK(rel(z_from_tau(tau), iunit * tau) == 0.0);

    // q^{1/2} at z = i is e^{-pi} with no sign ambiguity
    CHECK(rel(q_pow({0.5, 0.0}, {0.0, 1.0}), cplx{std::exp(-pi), 0.0}) < 1e-14);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> dm(0.1, 3.0), dph(-pi / 2 + 0.01, pi / 2 - 0.01);
    for (int i = 0; i < 1000; ++i) {
        const cplx t = std::polar(dm(rng), dph(rng));
        CHECK(tau_from_z(z_from_tau(t)) == t); // round-trips to the last bit
    }
    CHECK_THROWS_AS(z_from_tau(cplx{-1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(tau_from_z(cplx{0.0, -1.0}), std::domain_error);
}

TEST_CASE("truncation invariants") {
    CHECK_THROWS_AS(Truncation(4, 1e-12, 40.0), std::domain_error);
    CHECK_THROWS_AS(Truncation(100, 1e-17, 40.0), std::domain_error);
}

TEST_CASE("kahan accumulator recovers digits a naive sum loses") {
    KahanSum ks;
    double naive = 0.0;
    for (int i = 0; i < 100000; ++i) {
        ks.add({0.1, 0.0});
        naive += 0.1;
    }
    CHECK(std::abs(ks.total().real() - 10000.0) < 1e-9);
    CHECK(std::abs(ks.total().real() - 10000.0) <= std::abs(naive - 10000.0));
}
