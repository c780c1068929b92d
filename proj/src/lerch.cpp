#include "eisenzeta/lerch.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "eisenzeta/coeffs.hpp"
#include "eisenzeta/hypergeom.hpp"

namespace eisenzeta {

namespace {

// base^e for positive real base
inline cplx powc(double base, cplx e) { return std::exp(e * std::log(base)); }

bool is_nonpositive_integer(cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Godfrey's Lanczos set, g = 607/128, N = 15; relative error a few 1e-14
// across the band the artifact uses.
constexpr double lanczos_g = 4.7421875;
constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

cplx gamma_positive_half(cplx z) {
    // Re z >= 1/2
    cplx s = lanczos_c[0];
    for (size_t i = 1; i < lanczos_c.size(); ++i)
        s += lanczos_c[i] / (z - 1.0 + static_cast<double>(i));
    cplx t = z + (lanczos_g - 0.5);
    return std::sqrt(two_pi) * std::exp((z - 0.5) * std::log(t) - t) * s;
}

const std::vector<double>& b2_table() {
    static std::vector<double> b = bernoulli_numbers(64);
    return b;
}

constexpr int em_pcap = 30; // Euler-Maclaurin correction order cap

} // namespace

cplx gamma_fn(cplx s) {
    if (is_nonpositive_integer(s)) throw pole_error("gamma_fn: pole at non-positive integer");
    if (s.real() >= 0.5) return gamma_positive_half(s);
    // reflection
    return pi / (std::sin(pi * s) * gamma_positive_half(1.0 - s));
}

cplx reciprocal_gamma(cplx s) {
    if (is_nonpositive_integer(s)) return {0.0, 0.0};
    if (s.real() >= 0.5) return 1.0 / gamma_positive_half(s);
    return std::sin(pi * s) * gamma_positive_half(1.0 - s) / pi;
}

double reciprocal_gamma_deriv(int h) {
    if (h < 0) throw std::domain_error("reciprocal_gamma_deriv: h < 0");
    double f = 1.0;
    for (int i = 2; i <= h; ++i) f *= i;
    return (h % 2 == 0) ? f : -f;
}

cplx pochhammer(cplx s, int n) {
    if (n > 64 || n < -64) throw std::domain_error("pochhammer: |n| > 64");
    cplx p{1.0, 0.0};
    if (n >= 0) {
        for (int i = 0; i < n; ++i) p *= s + static_cast<double>(i);
        return p;
    }
    for (int i = 1; i <= -n; ++i) p *= s - static_cast<double>(i);
    return 1.0 / p;
}

namespace {

// zeta(r, a) = head + c^{1-r}/(r-1) + c^{-r}/2 + sum_j B_{2j}/(2j)! (r)_{2j-1} c^{-r-2j+1}
EvalResult hurwitz_em(cplx r, double a, const Truncation& t) {
    const auto& b2 = b2_table();
    const double absr = std::abs(r);
    long long m = static_cast<long long>(std::ceil(
        std::max({8.0, 1.2 * std::abs(r.imag()), 0.25 * (absr + 2.0 * em_pcap)})));

    EvalResult best;
    for (int attempt = 0;; ++attempt) {
        m = std::min<long long>(m, t.max_terms);
        KahanSum head;
        for (long long k = 0; k < m; ++k) head.add(powc(a + static_cast<double>(k), -r));
        const double c = a + static_cast<double>(m);

        cplx cpow_mr = powc(c, -r);
        cplx acc = head.total() + cpow_mr * c / (r - 1.0) + 0.5 * cpow_mr;

        // incremental (r)_{2j-1} and c^{-r-2j+1}
        cplx poch = r;            // (r)_1
        cplx cp = cpow_mr / c;    // c^{-r-1}
        const double cm2 = 1.0 / (c * c);
        double last = 0.0;
        for (int j = 1; j <= em_pcap; ++j) {
            cplx term = b2[static_cast<size_t>(2 * j)] * poch * cp;
            double f = 1.0;
            for (int i = 1; i <= 2 * j; ++i) f *= i;
            term /= f;
            acc += term;
            last = std::abs(term);
            if (j >= 2 && last <= 0.25 * t.tol * std::abs(acc)) break;
            poch *= (r + static_cast<double>(2 * j - 1)) * (r + static_cast<double>(2 * j));
            cp *= cm2;
        }

        best = {acc, 4.0 * last, m};
        if (best.error_estimate <= t.tol * std::max(std::abs(acc), 1e-300) || attempt >= 3 ||
            m >= t.max_terms)
            break;
        m *= 2;
    }
    if (best.error_estimate > 16.0 * t.tol * std::max(std::abs(best.value), 1e-300))
        throw budget_error("hurwitz_zeta: tolerance unreachable in budget", best);
    return best;
}

// sum_{k>=0} e((a+k) ks) (a+k)^{-r} with ks in [-1/2, 1/2) \ {0}:
// head + oscillatory boundary integral (incomplete gamma) + derivative corrections.
EvalResult twisted_em(cplx r, double a, double ks, const Truncation& t) {
    const auto& b2 = b2_table();
    const double absr = std::abs(r);
    const double abs1r = std::abs(cplx{1.0, 0.0} - r);
    // keep |w c| well inside the continued fraction's zone and the correction
    // terms geometric
    const double c_cf = std::max(6.0, 2.5 * abs1r) / (two_pi * std::abs(ks));
    double m0 = std::max({8.0, 1.2 * std::abs(r.imag()), 2.0 * (absr + 2.0 * em_pcap) * 0.32,
                          c_cf - a});
    long long m = static_cast<long long>(std::ceil(m0));

    EvalResult best;
    for (int attempt = 0;; ++attempt) {
        m = std::min<long long>(m, t.max_terms);
        KahanSum head;
        for (long long k = 0; k < m; ++k) {
            const double u = a + static_cast<double>(k);
            head.add(e_of(u * ks) * powc(u, -r));
        }
        const double c = a + static_cast<double>(m);
        const cplx w = cplx{0.0, -two_pi * ks};
        const cplx wc = w * c;

        double cf_err = 0.0;
        cplx cf = incomplete_gamma_cf_scaled(1.0 - r, wc, 0.25 * t.tol, &cf_err);
        cplx integral = powc(c, 1.0 - r) * std::exp(-wc) * cf;

        const cplx phase_c = e_of(c * ks);
        cplx acc = head.total() + integral + 0.5 * phase_c * powc(c, -r);

        // f^{(n)}(c) = phase_c * sum_i C(n,i) (2 pi i ks)^i (-1)^{n-i} (r)_{n-i} c^{-r-(n-i)}
        std::vector<cplx> poch(2 * em_pcap);
        poch[0] = {1.0, 0.0};
        for (size_t i = 1; i < poch.size(); ++i)
            poch[i] = poch[i - 1] * (r + static_cast<double>(i - 1));
        std::vector<cplx> cpow(2 * em_pcap);
        cpow[0] = powc(c, -r);
        for (size_t i = 1; i < cpow.size(); ++i) cpow[i] = cpow[i - 1] / c;
        const cplx tw = cplx{0.0, two_pi * ks};

        double last = 0.0;
        double fact2j = 1.0; // (2j)!
        for (int j = 1; j <= em_pcap; ++j) {
            const int n = 2 * j - 1;
            fact2j *= (2 * j - 1);
            fact2j *= (2 * j);
            cplx deriv{0.0, 0.0};
            cplx twp{1.0, 0.0};
            for (int i = 0; i <= n; ++i) {
                const double sgn = ((n - i) % 2 == 0) ? 1.0 : -1.0;
                deriv += binomial(n, i) * twp * sgn * poch[static_cast<size_t>(n - i)] *
                         cpow[static_cast<size_t>(n - i)];
                twp *= tw;
            }
            deriv *= phase_c;
            cplx term = -b2[static_cast<size_t>(2 * j)] / fact2j * deriv;
            acc += term;
            last = std::abs(term);
            if (j >= 2 && last <= 0.25 * t.tol * std::abs(acc)) break;
        }

        best = {acc, 4.0 * last + cf_err * std::abs(integral), m};
        if (best.error_estimate <= t.tol * std::max(std::abs(acc), 1e-300) || attempt >= 3 ||
            m >= t.max_terms)
            break;
        m *= 2;
    }
    if (best.error_estimate > 16.0 * t.tol * std::max(std::abs(best.value), 1e-300))
        throw budget_error("psi_lerch: tolerance unreachable in budget", best);
    return best;
}

EvalResult psi_via_functional_equation(cplx r, double g, double k, const Truncation& t);

EvalResult psi_dispatch(cplx r, double g, double k, const Truncation& t) {
    if (is_nonpositive_integer(r)) {
        const int j = static_cast<int>(-r.real());
        return {psi_special(j, g, k), 0.0, 0};
    }

    const double a = frac_parts(g).frac_prime; // index set starts at <g>' in (0,1]
    const double mshift = std::floor(k + 0.5);
    const double ks = k - mshift; // [-1/2, 1/2)
    const cplx phase = e_of(a * mshift);

    if (ks == 0.0) {
        if (r == cplx{1.0, 0.0})
            throw pole_error("psi_lerch: pole at r = 1 with integral twist");
        // Re r below the strip: the head sum's growing powers would cancel
        // catastrophically against the corrections, so bounce instead
        if (r.real() < -0.25) return psi_via_functional_equation(r, g, k, t);
        EvalResult res = hurwitz_em(r, a, t);
        res.value *= phase;
        return res;
    }
    if (r.real() > 0.25) {
        EvalResult res = twisted_em(r, a, ks, t);
        res.value *= phase;
        return res;
    }
    return psi_via_functional_equation(r, g, k, t);
}

// one functional-equation bounce; the inner calls land at Re(1-r) >= 0.75
EvalResult psi_via_functional_equation(cplx r, double g, double k, const Truncation& t) {
    EvalResult p1 = psi_dispatch(1.0 - r, k, -g, t);
    EvalResult p2 = psi_dispatch(1.0 - r, -k, g, t);
    const cplx scale = e_of(g * k) * gamma_fn(1.0 - r) * powc(two_pi, r - 1.0);
    const cplx rot = std::exp(cplx{0.0, pi / 2} * (1.0 - r));
    EvalResult out;
    out.value = scale * (rot * p1.value + p2.value / rot);
    out.error_estimate = std::abs(scale) * (std::abs(rot) * p1.error_estimate +
                                            p2.error_estimate / std::abs(rot));
    out.terms_used = p1.terms_used + p2.terms_used;
    return out;
}

} // namespace

EvalResult psi_lerch(const LerchArgs& a, const Truncation& t) {
    if (!std::isfinite(a.gamma) || !std::isfinite(a.kappa))
        throw std::domain_error("psi_lerch: non-finite parameters");
    return psi_dispatch(a.r, a.gamma, a.kappa, t);
}

EvalResult hurwitz_zeta(cplx r, double a, const Truncation& t) {
    if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: a must be positive");
    if (r == cplx{1.0, 0.0}) throw pole_error("hurwitz_zeta: pole at r = 1");
    if (is_nonpositive_integer(r)) {
        const int j = static_cast<int>(-r.real());
        return {-bernoulli_poly(j + 1, cplx{a, 0.0}) / (j + 1.0), 0.0, 0};
    }
    if (r.real() >= -0.25) return hurwitz_em(r, a, t);
    // continue through the psi machinery after shifting a into (0, 1]
    const double m = std::ceil(a - 1.0);
    const double a0 = a - m;
    EvalResult res = psi_dispatch(r, a0, 0.0, t);
    KahanSum head;
    for (double j = 0; j < m; ++j) head.add(powc(a0 + j, -r));
    res.value -= head.total();
    return res;
}

EvalResult exp_zeta(cplx r, double kappa, const Truncation& t) {
    return psi_lerch({r, 0.0, kappa}, t);
}

EvalResult psi_bilateral(cplx r, double gamma, double kappa, Branch b, const Truncation& t) {
    const cplx rot = std::exp(cplx{0.0, b == Branch::plus ? -pi : pi} * r);
    EvalResult n = psi_lerch({r, -gamma, -kappa}, t);
    EvalResult p = psi_lerch({r, gamma, kappa}, t);
    return {rot * n.value + p.value,
            std::abs(rot) * n.error_estimate + p.error_estimate,
            n.terms_used + p.terms_used};
}

EvalResult psi_bilateral_fe(cplx r, double gamma, double kappa, Branch b, const Truncation& t) {
    const double sg = (b == Branch::plus) ? 1.0 : -1.0;
    EvalResult p = psi_lerch({1.0 - r, -sg * kappa, sg * gamma}, t);
    const cplx scale = e_of(gamma * kappa) * powc(two_pi, r) * reciprocal_gamma(r) *
                       std::exp(cplx{0.0, -sg * pi / 2} * r);
    return {scale * p.value, std::abs(scale) * p.error_estimate, p.terms_used};
}

cplx psi_special(int j, double gamma, double kappa) {
    if (j < 0) throw std::domain_error("psi_special: j < 0");
    const auto fp = frac_parts(gamma);
    const CoeffTable c = coeff_C(j + 1, cplx{fp.frac, 0.0}, cover_e(kappa));
    cplx val = -c[j + 1] / static_cast<double>(j + 1);
    if (j == 0) val -= delta_int(gamma);
    return val;
}

cplx psi_residue_at_1(double gamma, double kappa) {
    const auto fp = frac_parts(gamma);
    return coeff_C(0, cplx{fp.frac, 0.0}, cover_e(kappa))[0];
}

} // namespace eisenzeta
