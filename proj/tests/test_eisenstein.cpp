#include <doctest.h>

#include <random>
#include <vector>

#include "eisenzeta/coeffs.hpp"
#include "eisenzeta/eisenstein.hpp"
#include "eisenzeta/hypergeom.hpp"
#include "eisenzeta/lerch.hpp"

using namespace eisenzeta;

namespace {

const Truncation tr{};

double rel(cplx a, cplx b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(xs.size());
    for (int i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

TEST_CASE("f_brute: half-integer symmetry gives a real mean") {
    EisensteinParams p{{6.0, 0.0}, 0.5, 0.5, 0.0, 0.0, {1.0, 0.0}};
    const BruteResult b = f_brute(p, 200);
    CHECK(std::abs(b.mean.value.imag()) <= 1e-10);
    // beta half-integral: no summand meets the negative real axis, so the
    // branches coincide
    CHECK(b.plus.value == b.minus.value);
}

TEST_CASE("f_brute: radius doubling stays within the reported tail") {
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> ds(4.0, 8.0), dp(-1.0, 1.0), dm(0.7, 1.8),
        dph(-1.0, 1.0);
    for (int i = 0; i < 12; ++i) {
        EisensteinParams p{{ds(rng), 0.0}, dp(rng), dp(rng), dp(rng), dp(rng),
                           std::polar(dm(rng), dph(rng))};
        const BruteResult small = f_brute(p, 60);
        const BruteResult big = f_brute(p, 120);
        CHECK(std::abs(small.mean.value - big.mean.value) <= small.mean.error_estimate);
    }
    EisensteinParams bad{{3.0, 0.0}, 0.0, 0.0, 0.0, 0.0, {1.0, 0.0}};
    CHECK_THROWS_AS(f_brute(bad, 50), std::domain_error);
}

TEST_CASE("A(2, alpha, 0) = pi^2 / sin^2(pi alpha)") {
    for (double alpha : {0.3, 0.45, 0.8}) {
        EisensteinParams p{{2.0, 0.0}, alpha, 0.0, 0.0, 0.0, {1.0, 0.0}};
        const double sa = std::sin(pi * alpha);
        CHECK(rel(abc_A(p, tr, true), cplx{pi * pi / (sa * sa), 0.0}) < 1e-11);
        CHECK(rel(abc_A(p, tr, false), cplx{pi * pi / (sa * sa), 0.0}) < 1e-11);
    }
}

TEST_CASE("B1 carries the sin(pi s) zero at integer s") {
    EisensteinParams p{{3.0, 0.0}, 0.3, 0.0, 0.2, 0.0, {1.0, 0.0}};
    CHECK(std::abs(abc_B1(p, tr, false)) < 1e-13);
}

TEST_CASE("B1 = A - psi_Z^+ (dual route)") {
    EisensteinParams p{{2.7, 0.0}, 0.4, 0.0, 0.1, 0.0, {1.0, 0.0}};
    const cplx a = abc_A(p, tr, true);
    const cplx zp = psi_bilateral(p.s, p.alpha, p.mu, Branch::plus, tr).value;
    CHECK(rel(abc_B1(p, tr, true), a - zp) < 1e-10);
}

TEST_CASE("abc first and second forms agree off the integers") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> ds(1.2, 4.0), di(-1.5, 1.5), dp(-1.0, 1.0);
    for (int i = 0; i < 15; ++i) {
        cplx s{ds(rng), di(rng)};
        EisensteinParams p{s, dp(rng), dp(rng), dp(rng), dp(rng), {1.0, 0.0}};
        CHECK(rel(abc_A(p, tr, false), abc_A(p, tr, true)) < 1e-9);
        CHECK(rel(abc_B1(p, tr, false), abc_B1(p, tr, true)) < 1e-9);
        CHECK(rel(abc_B2(p, tr, false), abc_B2(p, tr, true)) < 1e-9);
    }
}

TEST_CASE("theorem 1: f_qform equals the brute oracle") {
    struct Pt {
        cplx s;
        double a, b, m, n;
        cplx tau;
    };
    const Pt pts[] = {
        {{6.0, 0.0}, 0.3, 0.7, 0.1, 0.2, {1.0, 0.0}},
        {{4.0, 0.0}, 0.0, 0.0, 0.0, 0.0, std::polar(1.0, pi / 4)},
        {{8.5, 0.0}, 0.5, 0.5, 0.5, 0.5, std::polar(2.0, -pi / 6)},
    };
    for (const Pt& q : pts) {
        EisensteinParams p{q.s, q.a, q.b, q.m, q.n, q.tau};
        const BruteResult b = f_brute(p, 500);
        const EvalResult f = f_qform(p, tr);
        const double tol = std::max(1e-6, b.mean.error_estimate / std::abs(b.mean.value));
        CHECK(rel(f.value, b.mean.value) <= tol);
    }
}

TEST_CASE("f_qform at non-positive integer s reduces to delta(beta) A") {
    EisensteinParams p{{-2.0, 0.0}, 0.3, 0.0, 0.2, 0.4, {1.0, 0.0}};
    const EvalResult f = f_qform(p, tr);
    CHECK(rel(f.value, abc_A(p, tr, false)) < 1e-12);

    EisensteinParams p2 = p;
    p2.beta = 0.7; // delta(beta) = 0 and 1/Gamma kills the q-part
    CHECK(std::abs(f_qform(p2, tr).value) == 0.0);
}

TEST_CASE("unit parameter shifts leave F invariant (calibrated on the brute oracle)") {
    EisensteinParams p{{5.0, 0.0}, 0.3, 0.7, 0.1, 0.2, std::polar(1.1, 0.4)};
    EisensteinParams pa = p;
    pa.alpha += 1.0;
    EisensteinParams pb = p;
    pb.beta += 1.0;

    const cplx base = f_qform(p, tr).value;
    CHECK(rel(f_qform(pa, tr).value, base) < 1e-10);
    CHECK(rel(f_qform(pb, tr).value, base) < 1e-10);

    const BruteResult bb = f_brute(p, 150);
    const BruteResult ba = f_brute(pa, 150);
    CHECK(rel(ba.mean.value, bb.mean.value) < 1e-8); // phase is exactly 1
}

TEST_CASE("asymptotic main term switches off when the shifts are non-integral") {
    EisensteinParams p{{2.5, 0.0}, 0.3, 0.7, 0.1, 0.2, std::polar(0.1, pi / 4)};
    const AsymptoticSJ sj = asymptotic_SJ(p, {0, 0}, tr);
    CHECK(std::abs(sj.main) == 0.0);
    // J = 0 keeps only the j = -1 term, which carries C_0(<beta>, e~(nu)) = 0
    // for non-integral nu
    CHECK(std::abs(sj.series) == 0.0);

    EisensteinParams pn = p;
    pn.nu = 1.0; // now C_0 = e~(1)^{<beta>} is alive
    CHECK(std::abs(asymptotic_SJ(pn, {0, 0}, tr).series) > 0.0);
}

TEST_CASE("asymptotic ops refuse near-integer s") {
    EisensteinParams p{{2.0 + 1e-9, 0.0}, 0.3, 0.7, 0.1, 0.2, std::polar(0.3, pi / 4)};
    CHECK_THROWS_AS(asymptotic_SJ(p, {1, 0}, tr), std::domain_error);
}

TEST_CASE("remainder telescoping: R_J - R_{J+1} is the j = J series term") {
    EisensteinParams p{{2.5, 0.0}, 0.3, 0.7, 0.1, 0.2, std::polar(0.05, pi / 4)};
    for (int J : {0, 1, 2}) {
        const cplx rj = remainder_subtraction(p, {J, 0}, tr).value;
        const cplx rj1 = remainder_subtraction(p, {J + 1, 0}, tr).value;
        const auto ct = coeff_C(J + 1, cplx{frac_parts(p.beta).frac, 0.0}, cover_e(p.nu));
        const cplx term = 2.0 * std::sin(pi * p.s) *
                          std::pow(iunit, J + 1) * pochhammer(p.s, J) /
                          std::tgamma(J + 2.0) *
                          psi_lerch({p.s + static_cast<double>(J), -p.alpha, -p.mu}, tr).value *
                          ct[J + 1] * std::pow(p.tau, J);
        CHECK(rel(rj - rj1, term) < 1e-10);
    }
}

TEST_CASE("R_0 stays bounded and nonvanishing") {
    EisensteinParams p{{2.5, 0.0}, 0.3, 0.7, 0.1, 0.2, std::polar(0.05, pi / 4)};
    const double m = std::abs(remainder_subtraction(p, {0, 0}, tr).value);
    CHECK(m > 1e-6);
    CHECK(m < 1e4);
}

TEST_CASE("remainder scaling law in the hump-free window (J = 1)") {
    const Truncation tight{600000, 1e-15, 40.0};
    std::vector<double> xs, ys;
    for (int n = 4; n <= 8; ++n) {
        EisensteinParams p{{2.5, 0.0}, 0.3, 0.7, 0.1, 0.2,
                           0.2 * std::pow(2.0, -n) * std::polar(1.0, pi / 4)};
        const cplx r = remainder_subtraction(p, {1, 0}, tight).value;
        xs.push_back(std::log(std::abs(p.tau)));
        ys.push_back(std::log(std::abs(r)));
    }
    CHECK(std::abs(fit_slope(xs, ys) - 1.0) < 0.25);
}

TEST_CASE("mellin-barnes remainder equals the subtraction remainder") {
    EisensteinParams p{{3.2, 0.0}, 0.3, 0.7, 0.1, 0.2, std::polar(0.3, pi / 4)};
    const EvalResult sub = remainder_subtraction(p, {1, 0}, tr);
    const EvalResult mb = remainder_mellin_barnes(p, {1, 0}, tr);
    CHECK(rel(mb.value, sub.value) <= 1e-6);

    // contour-shift invariance: no pole between admissible abscissae
    const EvalResult u1 = remainder_mellin_barnes_at(p, {1, 0}, 0.35, tr);
    const EvalResult u2 = remainder_mellin_barnes_at(p, {1, 0}, 0.75, tr);
    CHECK(rel(u1.value, u2.value) < 1e-8);

    CHECK_THROWS_AS(remainder_mellin_barnes_at(p, {1, 0}, 1.5, tr), std::domain_error);
}

TEST_CASE("mellin-barnes integrand decays along the contour") {
    // independent reconstruction of the contour integrand from public pieces
    EisensteinParams p{{3.2, 0.0}, 0.3, 0.7, 0.1, 0.2, std::polar(0.3, pi / 4)};
    const double u = 0.5;
    auto integrand = [&](double v) {
        const cplx w{u, v};
        const cplx g = gamma_fn(p.s + w) * gamma_fn(-w) * reciprocal_gamma(p.s);
        const cplx zp = psi_bilateral(p.s + w, p.alpha, p.mu, Branch::plus, tr).value;
        const cplx zm = psi_bilateral(p.s + w, p.alpha, p.mu, Branch::minus, tr).value;
        const cplx pp = psi_lerch({-w, p.beta, p.nu}, tr).value;
        const cplx pm = psi_lerch({-w, -p.beta, -p.nu}, tr).value;
        return std::abs(g * zp * pp * std::exp(w * std::log(iunit * p.tau))) +
               std::abs(g * zm * pm * std::exp(w * std::log(-iunit * p.tau)));
    };
    double peak = 0.0;
    for (double v = -4.0; v <= 4.0; v += 0.5) peak = std::max(peak, integrand(v));
    // decay model e^{-(pi/2 - |arg tau|)|v|} with a polynomial allowance;
    // at arg tau = pi/4 and |v| = 30 the exponential alone is ~6e-11
    const double rate = pi / 2 - std::abs(std::arg(p.tau));
    for (double v : {30.0, -30.0, 40.0, -40.0}) {
        CHECK(integrand(v) < 1e6 * std::exp(-rate * std::abs(v)) * peak);
        CHECK(integrand(v) < 1e-5 * peak);
    }
}

TEST_CASE("theorem 3: refined remainder reproduces the reference remainder") {
    for (double sgn : {1.0, -1.0}) {
        EisensteinParams p{{2.5, 0.0}, 0.3, 0.7, 0.1, 0.2, std::polar(0.4, sgn * pi / 3)};
        const RefinedRemainder rr = remainder_refined(p, {2, 1}, tr);
        const EvalResult sub = remainder_subtraction(p, {2, 0}, tr);
        CHECK(rel(rr.qhat_part + rr.sstar_part, sub.value) <= 1e-7);
    }
    // strict sectors: arg tau = 0 is refused
    EisensteinParams flat{{2.5, 0.0}, 0.3, 0.7, 0.1, 0.2, {0.4, 0.0}};
    CHECK_THROWS_AS(remainder_refined(flat, {2, 1}, tr), std::domain_error);
}

TEST_CASE("refined remainder r* follows the sigma+J+K scaling") {
    const cplx s{2.5, 0.0};
    std::vector<double> xs, ys;
    for (int n = 2; n <= 5; ++n) {
        EisensteinParams p{s, 0.3, 0.7, 0.1, 0.2,
                           0.3 * std::pow(2.0, -n) * std::polar(1.0, pi / 4)};
        const RefinedRemainder rr = remainder_refined(p, {2, 1}, tr);
        xs.push_back(std::log(std::abs(p.tau)));
        ys.push_back(std::log(std::abs(rr.rstar.value)));
    }
    CHECK(std::abs(fit_slope(xs, ys) - 5.5) < 0.3);
}

TEST_CASE("S* terms decay monotonically along the diagonal beyond m+n ~ 10") {
    const cplx s{2.5, 0.0};
    const int J = 2;
    const cplx tau = std::polar(0.5, pi / 4);
    const double am0 = frac_parts(-0.3).frac_prime;
    const double an0 = frac_parts(0.2).frac_prime;
    double prev = 1e300;
    for (int m = 5; m <= 14; ++m) {
        const double xm = am0 + m;
        const double xn = an0 + m;
        const CoverPoint zc{two_pi * xm * xn / std::abs(tau), -std::arg(tau)};
        const double mag = std::abs(std::pow(xn, s.real() - 1.0) * f_sJ(s, J, zc, tr).value);
        if (m >= 10) CHECK(mag < prev);
        prev = mag;
    }
}
