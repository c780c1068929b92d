#include "eisenzeta/classical.hpp"

#include <algorithm>
#include <vector>

#include "eisenzeta/coeffs.hpp"
#include "eisenzeta/lerch.hpp"
#include "eisenzeta/qseries.hpp"

namespace eisenzeta {

namespace {

constexpr double log_2pi = 1.8378770664093454835606594728112353;

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

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void require_even(int weight2k) {
    if (weight2k % 2 != 0) throw std::domain_error("classical: weight must be even");
}

// sum_{l>=1} l^{2k-1} q^l/(1-q^l) = S_{1-2k}(0,0;0,0;q)
EvalResult lambert_sum(int k, cplx z, const Truncation& t) {
    return s_eval({cplx(1.0 - 2.0 * k, 0.0), 0.0, 0.0, 0.0, 0.0, z, false}, t);
}

void require_window(const LatticePoint& pt) {
    if (!(pt.alpha > -1.0 && pt.alpha < 1.0 && pt.beta > -1.0 && pt.beta < 1.0) ||
        (pt.alpha == 0.0 && pt.beta == 0.0))
        throw std::domain_error("classical: (alpha, beta) must lie in (-1,1)^2 minus the origin");
}

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); } // sgn 0 = 0

// log (Z; q)_infinity by the truncated product, |Z| < 1 guaranteed by callers
cplx log_qpochhammer(cplx Z, cplx z, const Truncation& t) {
    KahanSum acc;
    for (long long l = 0; l < t.max_terms; ++l) {
        const cplx f = Z * q_pow(cplx(static_cast<double>(l), 0.0), z);
        const double m = std::abs(f);
        if (m >= 1.0) throw std::domain_error("log_qpochhammer: |Z q^l| >= 1");
        acc.add(std::log(1.0 - f));
        if (m < 0.25 * t.tol * (1.0 - std::abs(q_from_z(z)))) // log(1-x) tail <= 2|x| sum
            return acc.total();
    }
    throw budget_error("log_qpochhammer: budget exhausted", {acc.total(), 0.0, t.max_terms});
}

} // namespace

double eisenstein_a(int k, const Truncation& t) {
    if (k == 0) return -log_2pi;
    if (k >= 1) {
        // zeta(1-2k) = -B_{2k}/(2k)
        const auto b = bernoulli_numbers(2 * k);
        return -b[static_cast<size_t>(2 * k)] / (2.0 * k);
    }
    return hurwitz_zeta(cplx(1.0 - 2.0 * k, 0.0), 1.0, t).value.real();
}

EvalResult eisenstein_E(int weight2k, cplx z, const Truncation& t) {
    require_even(weight2k);
    if (!(z.imag() > 0.0)) throw std::domain_error("eisenstein_E: z not in upper half-plane");
    const int k = weight2k / 2;
    const double a = eisenstein_a(k, t);
    const EvalResult s = lambert_sum(k, z, t);
    return {1.0 + 2.0 / a * s.value, 2.0 / std::abs(a) * s.error_estimate, s.terms_used};
}

IdentityPair quasimodular_check(int weight2k, cplx z, const Truncation& t) {
    require_even(weight2k);
    const int k = weight2k / 2;
    const cplx lhs = eisenstein_E(weight2k, -1.0 / z, t).value;

    const double a = eisenstein_a(k, t);
    const auto b = bernoulli_numbers(std::max(2, 2 - 2 * k));
    cplx corr{0.0, 0.0};
    if (k == 0) corr += std::log(z) / (cplx{0.0, two_pi}) - 0.25;
    for (int j = 0; j <= 1 - k; ++j) {
        const int other = 2 - 2 * k - 2 * j;
        corr += b[static_cast<size_t>(2 * j)] * b[static_cast<size_t>(other)] /
                (factorial(2 * j) * factorial(other)) * ipow(z, 1 - 2 * k - 2 * j);
    }
    corr *= ipow(cplx{0.0, -two_pi}, 1 - 2 * k) / a;

    const cplx rhs = ipow(z, 2 * k) * (eisenstein_E(weight2k, z, t).value + corr);
    return {lhs, rhs};
}

EvalResult wp(const LatticePoint& pt, WpRoute route, const Truncation& t, int radius) {
    const cplx z = pt.z;
    if (!(z.imag() > 0.0)) throw std::domain_error("wp: z not in upper half-plane");
    const bool alpha_int = frac_parts(pt.alpha).is_int;
    const bool beta_int = frac_parts(pt.beta).is_int;
    if (alpha_int && beta_int) throw std::domain_error("wp: w lies on the lattice");

    if (route == WpRoute::lattice) {
        const cplx w = pt.w();
        KahanSum acc;
        acc.add(1.0 / (w * w));
        for (long long m = -radius; m <= radius; ++m) {
            for (long long n = -radius; n <= radius; ++n) {
                if (m == 0 && n == 0) continue;
                const cplx om = cplx(static_cast<double>(m), 0.0) + static_cast<double>(n) * z;
                const cplx d = w - om;
                acc.add(1.0 / (d * d) - 1.0 / (om * om));
            }
        }
        // symmetric box: the odd 2w/om^3 tail cancels, leaving O(R^-2)
        const double tail = 40.0 * std::norm(w) * std::pow(static_cast<double>(radius), -2.0);
        return {acc.total(), tail, (2LL * radius + 1) * (2LL * radius + 1)};
    }

    const EvalResult e2 = eisenstein_E(2, z, t);
    const EvalResult sp = s_eval({{-1.0, 0.0}, pt.beta, 0.0, 0.0, pt.alpha, z, false}, t);
    const EvalResult sm = s_eval({{-1.0, 0.0}, -pt.beta, 0.0, 0.0, -pt.alpha, z, false}, t);
    cplx val = -pi * pi / 3.0 * e2.value - 4.0 * pi * pi * (sp.value + sm.value);
    if (beta_int) {
        const double sa = std::sin(pi * pt.alpha);
        val += pi * pi / (sa * sa);
    }
    const double err = pi * pi / 3.0 * e2.error_estimate +
                       4.0 * pi * pi * (sp.error_estimate + sm.error_estimate);
    return {val, err, e2.terms_used + sp.terms_used + sm.terms_used};
}

EInvariants invariants_e(cplx z, const Truncation& t) {
    if (!(z.imag() > 0.0)) throw std::domain_error("invariants_e: z not in upper half-plane");
    // p = e(z/2); all p-powers through the e(x z/2) convention
    const cplx zh = 0.5 * z;
    const double p4 = 4.0 * pi * pi;

    auto psum = [&](double step0, double step, double sign_den) {
        // sum_{l>=1} (2l-1) p^{x_l} / (1 -+ p^{x_l}), x_l = step0 + step (l-1)
        KahanSum acc;
        const double imz = zh.imag();
        for (long long l = 1; l < t.max_terms; ++l) {
            const double x = step0 + step * static_cast<double>(l - 1);
            const cplx px = q_pow(cplx(x, 0.0), zh);
            const cplx term = (2.0 * static_cast<double>(l) - 1.0) * px /
                              (1.0 - sign_den * px);
            acc.add(term);
            if (std::exp(-two_pi * imz * x) * (2.0 * l + 10.0) <
                0.1 * t.tol * (std::abs(acc.total()) + 1e-30))
                break;
        }
        return acc.total();
    };

    EInvariants out;
    out.e1 = p4 * (1.0 / 6.0 + 4.0 * psum(2.0, 4.0, +1.0)); // p^{4l-2}/(1-p^{4l-2})
    out.e2 = p4 * (-1.0 / 12.0 - 2.0 * psum(1.0, 2.0, +1.0)); // p^{2l-1}/(1-p^{2l-1})
    out.e3 = p4 * (-1.0 / 12.0 + 2.0 * psum(1.0, 2.0, -1.0)); // p^{2l-1}/(1+p^{2l-1})
    return out;
}

EvalResult wzeta(const LatticePoint& pt, const Truncation& t) {
    require_window(pt);
    const cplx z = pt.z;
    if (!(z.imag() > 0.0)) throw std::domain_error("wzeta: z not in upper half-plane");
    const EvalResult e2 = eisenstein_E(2, z, t);
    const EvalResult sp = s_eval({{0.0, 0.0}, pt.beta, 0.0, 0.0, pt.alpha, z, false}, t);
    const EvalResult sm = s_eval({{0.0, 0.0}, -pt.beta, 0.0, 0.0, -pt.alpha, z, false}, t);
    cplx val = pi * pi / 3.0 * e2.value * pt.w() - sgn(pt.beta) * pi * iunit -
               two_pi * iunit * (sp.value - sm.value);
    if (frac_parts(pt.beta).is_int) val += pi / std::tan(pi * pt.alpha);
    const double err = pi * pi / 3.0 * e2.error_estimate * std::abs(pt.w()) +
                       two_pi * (sp.error_estimate + sm.error_estimate);
    return {val, err, e2.terms_used + sp.terms_used + sm.terms_used};
}

EtaInvariants eta_invariants(cplx z, const Truncation& t) {
    const cplx e2 = eisenstein_E(2, z, t).value;
    EtaInvariants out;
    out.eta1 = pi * pi / 6.0 * e2;
    out.eta2 = pi * pi / 6.0 * e2 * z - pi * iunit;
    out.eta3 = -pi * pi / 6.0 * e2 * (1.0 + z) + pi * iunit;
    return out;
}

std::array<cplx, 3> legendre_values(cplx z, const Truncation& t) {
    const EtaInvariants et = eta_invariants(z, t);
    return {
        et.eta1 * z / 2.0 - et.eta2 / 2.0,
        et.eta2 * (-(1.0 + z) / 2.0) - et.eta3 * z / 2.0,
        et.eta3 / 2.0 - et.eta1 * (-(1.0 + z) / 2.0),
    };
}

SigmaForms wsigma(const LatticePoint& pt, const Truncation& t) {
    require_window(pt);
    const cplx z = pt.z;
    if (!(z.imag() > 0.0)) throw std::domain_error("wsigma: z not in upper half-plane");
    const cplx w = pt.w();
    const cplx e2 = eisenstein_E(2, z, t).value;
    const bool beta_int = frac_parts(pt.beta).is_int;

    const cplx quad = pi * pi / 6.0 * e2 * w * w + sgn(pt.beta) * pi * iunit * (0.5 - w);

    SigmaForms out;
    {
        const EvalResult sp = s_eval({{1.0, 0.0}, pt.beta, 0.0, 0.0, pt.alpha, z, false}, t);
        const EvalResult sm = s_eval({{1.0, 0.0}, -pt.beta, 0.0, 0.0, -pt.alpha, z, false}, t);
        const EvalResult s0 = s_eval({{1.0, 0.0}, 0.0, 0.0, 0.0, 0.0, z, false}, t);
        cplx v = quad - sp.value - sm.value + 2.0 * s0.value - log_2pi;
        if (beta_int) v += std::log(cplx(2.0 * std::sin(pi * pt.alpha), 0.0));
        out.log_form = v;
    }
    {
        const double bp = frac_parts(pt.beta).frac_prime;
        const double bm = frac_parts(-pt.beta).frac_prime;
        const cplx top1 = log_qpochhammer(e_of(pt.alpha) * q_pow(cplx(bp, 0.0), z), z, t);
        const cplx top2 = log_qpochhammer(e_of(-pt.alpha) * q_pow(cplx(bm, 0.0), z), z, t);
        const cplx bot = log_qpochhammer(q_pow(cplx(1.0, 0.0), z), z, t);
        cplx v = std::exp(quad + top1 + top2 - 2.0 * bot) / two_pi;
        if (beta_int) v *= 2.0 * std::sin(pi * pt.alpha);
        out.product_form = v;
    }
    return out;
}

cplx fprime_weight0(cplx y, const Truncation& t) {
    if (!(y.imag() > 0.0)) throw std::domain_error("fprime_weight0: y not in upper half-plane");
    // evaluate the Section-8 weight-0 derivative display at -1/z = y
    const cplx z = -1.0 / y;
    const cplx tau = tau_from_z(z);
    const EvalResult s1 = s_eval({{1.0, 0.0}, 0.0, 0.0, 0.0, 0.0, z, false}, t);
    return -log_2pi - std::log(tau) + pi * tau / 6.0 - pi / (6.0 * tau) + 2.0 * s1.value;
}

} // namespace eisenzeta
