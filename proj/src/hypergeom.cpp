#include "eisenzeta/hypergeom.hpp"

#include <algorithm>
#include <vector>

#include "eisenzeta/lerch.hpp"

namespace eisenzeta {

namespace {

constexpr double euler_mascheroni = 0.57721566490153286060651209008240243;

bool exact_nonpositive_int(cplx a) {
    return a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::floor(a.real());
}

// E_1(Z) = Gamma(0, Z), ascending series, small |Z|.
cplx e1_series(cplx Z, double tol) {
    cplx sum{0.0, 0.0};
    cplx term{1.0, 0.0};
    for (int n = 1; n < 500; ++n) {
        term *= -Z / static_cast<double>(n);
        cplx add = -term / static_cast<double>(n);
        sum += add;
        if (std::abs(add) < tol * (std::abs(sum) + 1.0)) break;
    }
    return -euler_mascheroni - std::log(Z) + sum;
}

// gamma(a, Z) = Z^a e^{-Z} sum_n Z^n / (a (a+1) ... (a+n)); Re a away from
// non-positive integers.
cplx lower_gamma_series(cplx a, cplx Z, double tol) {
    cplx term = 1.0 / a;
    cplx sum = term;
    for (int n = 1; n < 2000; ++n) {
        term *= Z / (a + static_cast<double>(n));
        sum += term;
        if (std::abs(term) < tol * std::abs(sum)) break;
    }
    return std::exp(a * std::log(Z) - Z) * sum;
}

// Gamma(a, Z) for |Z| below the continued-fraction zone.
cplx upper_gamma_small(cplx a, cplx Z, double tol) {
    if (exact_nonpositive_int(a)) {
        const int h = static_cast<int>(-a.real());
        cplx g = e1_series(Z, tol); // Gamma(0, Z)
        const cplx emz = std::exp(-Z);
        for (int j = 0; j < h; ++j) {
            const double aj = -static_cast<double>(j) - 1.0;
            g = (g - std::exp(aj * std::log(Z)) * emz) / aj;
        }
        return g;
    }
    // lift to Re(a+m) in [0.5, 1.5), evaluate, recurse down
    const int m = std::max(0, static_cast<int>(std::ceil(0.5 - a.real())));
    const cplx top = a + static_cast<double>(m);
    cplx g = gamma_fn(top) - lower_gamma_series(top, Z, tol);
    const cplx emz = std::exp(-Z);
    for (int j = m - 1; j >= 0; --j) {
        const cplx aj = a + static_cast<double>(j);
        g = (g - std::exp(aj * std::log(Z)) * emz) / aj;
    }
    return g;
}

double cf_zone_threshold(cplx a) { return std::max(3.0, 1.2 * std::abs(a)); }

} // namespace

cplx incomplete_gamma_cf_scaled(cplx a, cplx Z, double tol, double* cf_err) {
    const cplx tiny{1e-290, 0.0};
    cplx b = Z + 1.0 - a;
    cplx f = (b == cplx{0.0, 0.0}) ? tiny : b;
    cplx C = f;
    cplx D{0.0, 0.0};
    double delta_dist = 1.0;
    for (int i = 1; i < 4000; ++i) {
        const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        D = b + an * D;
        if (D == cplx{0.0, 0.0}) D = tiny;
        C = b + an / C;
        if (C == cplx{0.0, 0.0}) C = tiny;
        D = 1.0 / D;
        const cplx delta = C * D;
        f *= delta;
        delta_dist = std::abs(delta - 1.0);
        if (delta_dist < tol) break;
    }
    if (cf_err) *cf_err = delta_dist;
    return 1.0 / f;
}

EvalResult upper_incomplete_gamma(cplx a, cplx Z, const Truncation& t) {
    if (Z == cplx{0.0, 0.0}) {
        if (a.real() <= 0.0) throw std::domain_error("upper_incomplete_gamma: Z = 0 with Re a <= 0");
        return {gamma_fn(a), 0.0, 0};
    }
    if (!(std::abs(std::arg(Z)) < pi))
        throw std::domain_error("upper_incomplete_gamma: |arg Z| must be < pi");

    if (std::abs(Z) >= cf_zone_threshold(a)) {
        double cf_err = 0.0;
        const cplx cf = incomplete_gamma_cf_scaled(a, Z, 0.1 * t.tol, &cf_err);
        const cplx val = std::exp(a * std::log(Z) - Z) * cf;
        return {val, cf_err * std::abs(val), 0};
    }
    const cplx val = upper_gamma_small(a, Z, 0.1 * t.tol);
    // the series route pits gamma(a,Z) against Gamma(a); budget the cancellation
    const double cancel = std::exp(std::abs(Z)) * 1e-16;
    return {val, cancel * std::max(1.0, std::abs(val)) + 0.1 * t.tol * std::abs(val), 0};
}

EvalResult kummer_u_quadrature(cplx a, cplx c, cplx Z, const Truncation& t) {
    if (!(a.real() > 0.0)) throw std::domain_error("kummer_u_quadrature: Re a must be > 0");
    if (!(std::abs(std::arg(Z)) < pi))
        throw std::domain_error("kummer_u_quadrature: |arg Z| must be < pi");

    const double phi = std::arg(Z);
    const double az = std::abs(Z);
    const cplx ray = std::exp(cplx{0.0, -phi}); // integrate along t = ray * u
    const cplx expo = c - a - 1.0;

    auto integrand = [&](double u) -> cplx {
        if (az * u > 740.0) return {0.0, 0.0};
        return std::exp(-az * u + (a - 1.0) * std::log(u)) * std::pow(1.0 + ray * u, expo);
    };

    // exp-sinh: u = exp((pi/2) sinh x); doubly exponential at both ends.
    // The left reach must push u^{Re a} below the tolerance floor.
    const double x_lim =
        std::max(4.3, std::asinh(2.0 * 95.0 / (pi * std::min(a.real(), 1.0))));
    auto node_sum = [&](double h, bool odd_only) {
        KahanSum s;
        const long long n_max = static_cast<long long>(std::floor(x_lim / h));
        for (long long i = -n_max; i <= n_max; ++i) {
            if (odd_only && (i % 2 == 0)) continue;
            const double x = h * static_cast<double>(i);
            const double sh = std::sinh(x);
            const double u = std::exp(0.5 * pi * sh);
            const double w = 0.5 * pi * std::cosh(x) * u;
            if (u == 0.0 || !std::isfinite(w)) continue;
            s.add(integrand(u) * w);
        }
        return s.total();
    };

    double h = 0.5;
    cplx total = node_sum(h, false) * h;
    double err = std::abs(total);
    for (int level = 0; level < 7; ++level) {
        const cplx finer = 0.5 * total + 0.5 * h * node_sum(0.5 * h, true);
        err = std::abs(finer - total);
        total = finer;
        h *= 0.5;
        if (err < t.tol * std::abs(total) && level >= 2) break;
    }

    const cplx pref = std::exp(cplx{0.0, -phi} * a) * reciprocal_gamma(a);
    return {pref * total, std::abs(pref) * err, 0};
}

EvalResult kummer_u(cplx a, cplx c, cplx Z, const Truncation& t) {
    if (Z == cplx{0.0, 0.0}) throw std::domain_error("kummer_u: Z = 0");
    if (c == a + 1.0) {
        return {std::exp(-a * std::log(Z)), 0.0, 0}; // U(a; a+1; Z) = Z^{-a}
    }
    if (c == a) {
        // U(a; a; Z) = e^Z Gamma(1-a, Z), scaled through the continued
        // fraction when e^Z alone would overflow
        const cplx b = 1.0 - a;
        if (std::abs(Z) >= std::max(4.0, 1.4 * std::abs(b))) {
            double cf_err = 0.0;
            const cplx cf = incomplete_gamma_cf_scaled(b, Z, 0.1 * t.tol, &cf_err);
            const cplx val = std::exp(b * std::log(Z)) * cf;
            return {val, cf_err * std::abs(val), 0};
        }
        EvalResult g = upper_incomplete_gamma(b, Z, t);
        const cplx ez = std::exp(Z);
        return {ez * g.value, std::abs(ez) * g.error_estimate, g.terms_used};
    }
    if (a.real() > 0.0 && std::abs(std::arg(Z)) < pi / 2)
        return kummer_u_quadrature(a, c, Z, t);
    throw std::domain_error("kummer_u: unsupported shape");
}

EvalResult f_sJ(cplx s, int J, const CoverPoint& Z, const Truncation& t) {
    if (J < 1) throw std::domain_error("f_sJ: J must be >= 1");
    const cplx a = s + static_cast<double>(J);
    if (a == cplx{0.0, 0.0}) return {{1.0, 0.0}, 0.0, 0}; // e^Z Gamma(1, Z) = 1

    const double theta = Z.argument;
    if (!(std::abs(theta) < 1.5 * pi - 1e-12))
        throw std::domain_error("f_sJ: |arg Z| must be < 3 pi / 2");
    if (std::abs(std::abs(theta) - pi) < 1e-9)
        throw std::domain_error("f_sJ: argument on the negative-axis cut");

    const cplx zp = Z.project(); // principal representative of the same point
    if (std::abs(theta) < pi) return kummer_u(a, a, zp, t);

    // continuation across the cut: Gamma(1-a, Z~) =
    //   (1 - e(sg (1-a))) Gamma(1-a) + e(sg (1-a)) Gamma(1-a, Z_p)
    const double sg = (theta > 0) ? 1.0 : -1.0;
    const cplx omega = e_of(sg * (1.0 - a));
    const cplx extra = std::exp(zp) * (1.0 - omega) * gamma_fn(1.0 - a); // Re zp < 0 here
    EvalResult base = kummer_u(a, a, zp, t);
    return {extra + omega * base.value, std::abs(omega) * base.error_estimate, base.terms_used};
}

EvalResult kummer_1f1(cplx a, cplx c, cplx Z, const Truncation& t) {
    if (exact_nonpositive_int(c)) throw std::domain_error("kummer_1f1: c at a non-positive integer");
    KahanSum sum;
    cplx term{1.0, 0.0};
    sum.add(term);
    int quiet = 0;
    const long long cap = std::min<long long>(t.max_terms, 4000);
    for (long long k = 0; k < cap; ++k) {
        const double kd = static_cast<double>(k);
        term *= (a + kd) * Z / ((c + kd) * (kd + 1.0));
        sum.add(term);
        if (std::abs(term) <= t.tol * std::abs(sum.total())) {
            if (++quiet >= 2) return {sum.total(), std::abs(term), k + 1};
        } else {
            quiet = 0;
        }
    }
    throw budget_error("kummer_1f1: series did not settle in budget",
                       {sum.total(), std::abs(term), cap});
}

} // namespace eisenzeta
