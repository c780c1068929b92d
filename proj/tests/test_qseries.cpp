#include <doctest.h>

#include <random>

#include "eisenzeta/qseries.hpp"

using namespace eisenzeta;

namespace {

const Truncation tr{};

double rel(cplx a, cplx b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

SArgs random_args(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dp(-2.0, 2.0), dr(-2.0, 2.5), dm(0.4, 2.0),
        dph(-1.2, 1.2);
    SArgs a;
    a.r = {dr(rng), dp(rng)};
    a.gamma = dp(rng);
    a.delta = dp(rng);
    a.kappa = dp(rng);
    a.lambda = dp(rng);
    a.z = iunit * std::polar(dm(rng), dph(rng));
    return a;
}

} // namespace

TEST_CASE("S vanishes termwise as |q| -> 0") {
    // every term carries at least the q-power <gamma>' <delta>'
    SArgs a{{1.5, 0.0}, 0.3, 0.7, 0.2, 0.4, {0.0, 60.0}, false};
    const double lead = std::exp(-two_pi * 60.0 * 0.3 * 0.7);
    CHECK(std::abs(s_eval(a, tr).value) < 2.0 * lead);
    a.z = {0.0, 200.0};
    CHECK(std::abs(s_eval(a, tr).value) < 1e-100);
}

TEST_CASE("Lambert reduction at the Ramanujan point") {
    // 2 S_3(0,0;0,0;q) at z = i is the Lambert-type sum of Ramanujan's zeta(3) formula
    SArgs a{{3.0, 0.0}, 0.0, 0.0, 0.0, 0.0, {0.0, 1.0}, false};
    KahanSum direct;
    for (int l = 1; l <= 60; ++l)
        direct.add(std::pow(l, -3.0) / (std::exp(two_pi * l) - 1.0));
    CHECK(rel(s_eval(a, tr).value, direct.total()) < 1e-13);
}

TEST_CASE("single-sum and double-sum representations agree") {
    SArgs a{{-1.0, 0.0}, 0.3, 0.7, 0.2, 0.4, {0.0, 1.0}, false};
    const cplx single = s_eval(a, tr).value;
    const cplx dbl = s_eval_double(a, tr).value;
    CHECK(rel(single, dbl) < 1e-12);

    std::mt19937_64 rng(83);
    for (int i = 0; i < 40; ++i) {
        SArgs b = random_args(rng);
        const cplx s1 = s_eval(b, tr).value;
        const cplx s2 = s_eval_double(b, tr).value;
        CHECK(rel(s1, s2) < 1e-10);
    }
}

TEST_CASE("dual flag evaluates at qhat") {
    SArgs a{{2.0, 0.0}, 0.3, 0.7, 0.2, 0.4, {0.5, 1.5}, true};
    SArgs b = a;
    b.dual = false;
    b.z = -1.0 / a.z;
    CHECK(rel(s_eval(a, tr).value, s_eval(b, tr).value) < 1e-14);
}

TEST_CASE("tail bound is monotone and dominates the observed truncation error") {
    std::mt19937_64 rng(89);
    for (int i = 0; i < 100; ++i) {
        SArgs a = random_args(rng);
        for (long long L : {8LL, 16LL, 32LL}) {
            CHECK(s_tail_bound(a, L + 1) <= s_tail_bound(a, L));
        }
    }

    // bound(L) >= |full - truncated(L)| against a much longer reference
    const Truncation tight{200000, 1e-15, 40.0};
    for (int i = 0; i < 200; ++i) {
        SArgs a = random_args(rng);
        const EvalResult ref = s_eval(a, tight);
        const cplx full = ref.value;
        const double gp = frac_parts(a.gamma).frac_prime;
        const double x0 = frac_parts(a.delta).frac_prime;
        const cplx ze = a.z_effective();
        const long long L = 10;
        KahanSum trunc;
        double abssum = 0.0;
        for (long long l = 0; l < L; ++l) {
            const double x = x0 + static_cast<double>(l);
            const cplx term = e_of(x * a.lambda) * q_pow(cplx{gp * x, 0.0}, ze) /
                              (std::exp(a.r * std::log(x)) *
                               (1.0 - e_of(a.kappa) * q_pow(cplx{x, 0.0}, ze)));
            trunc.add(term);
            abssum += std::abs(term);
        }
        const cplx pref = e_of(gp * a.kappa);
        const double observed = std::abs(full - pref * trunc.total());
        const double round_floor = 32.0 * 1e-16 * (1.0 + abssum + std::abs(full));
        CHECK(s_tail_bound(a, L) + ref.error_estimate + round_floor >= observed);
    }
}

TEST_CASE("tail bound decays like e^{-2 pi L} at z = i, gamma = delta = 0") {
    SArgs a{{1.0, 0.0}, 0.0, 0.0, 0.0, 0.0, {0.0, 1.0}, false};
    // fit the log-bound slope over L = 10..30
    const double b1 = std::log(s_tail_bound(a, 10));
    const double b2 = std::log(s_tail_bound(a, 30));
    const double slope = (b2 - b1) / 20.0;
    CHECK(std::abs(slope + two_pi) < 0.05 * two_pi);
}

TEST_CASE("resonant geometric denominator raises a domain error") {
    SArgs a{{1.0, 0.0}, 0.5, 1e-16, 0.0, 0.0, {0.0, 1.0}, false};
    CHECK_THROWS_AS(s_eval(a, tr), std::domain_error);
}
