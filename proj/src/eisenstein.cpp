#include "eisenzeta/eisenstein.hpp"

#include <algorithm>
#include <vector>

#include "eisenzeta/coeffs.hpp"
#include "eisenzeta/hypergeom.hpp"
#include "eisenzeta/lerch.hpp"
#include "eisenzeta/parallel.hpp"
#include "eisenzeta/qseries.hpp"

namespace eisenzeta {

namespace {

inline cplx powc(double base, cplx e) { return std::exp(e * std::log(base)); }
inline cplx powz(cplx base, cplx e) { return std::exp(e * std::log(base)); }

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

// min |x + y z| over the boundary of the unit square in (x, y); scales the
// brute tail estimate.
double lattice_gap(cplx z) {
    double best = std::min(1.0, std::abs(z));
    for (int i = 0; i <= 512; ++i) {
        const double u = -1.0 + 2.0 * i / 512.0;
        best = std::min(best, std::abs(cplx{1.0, 0.0} + u * z));
        best = std::min(best, std::abs(cplx{u, 0.0} + z));
    }
    return best;
}

// one summand magnitude dispatcher: base^{-s} with the plus-branch argument
struct PowPlan {
    enum class Kind { integer, half_integer, real, generic } kind;
    int n = 0;    // integer exponent part
    double sr = 0.0;
    cplx s;

    static PowPlan make(cplx s) {
        PowPlan p;
        p.s = s;
        p.sr = s.real();
        if (s.imag() == 0.0) {
            const double r2 = 2.0 * s.real();
            if (s.real() == std::floor(s.real()) && std::abs(s.real()) <= 64) {
                p.kind = Kind::integer;
                p.n = static_cast<int>(s.real());
            } else if (r2 == std::floor(r2) && std::abs(r2) <= 129) {
                p.kind = Kind::half_integer;
                p.n = static_cast<int>(std::floor(s.real()));
            } else {
                p.kind = Kind::real;
            }
        } else {
            p.kind = Kind::generic;
        }
        return p;
    }

    cplx inv_pow(cplx base) const { // base^{-s}
        switch (kind) {
            case Kind::integer:
                return 1.0 / ipow(base, n);
            case Kind::half_integer:
                return 1.0 / (ipow(base, n) * std::sqrt(base));
            case Kind::real: {
                const double lr = 0.5 * std::log(std::norm(base));
                const double th = std::atan2(base.imag(), base.real());
                return std::polar(std::exp(-sr * lr), -sr * th);
            }
            case Kind::generic:
            default: {
                const double lr = 0.5 * std::log(std::norm(base));
                const double th = std::atan2(base.imag(), base.real());
                return std::exp(-s * cplx{lr, th});
            }
        }
    }
};

struct BruteRaw {
    cplx plus;
    cplx negrow; // plus-branch sum of summands with base on the negative real axis
    double tail;
};

BruteRaw brute_core(const EisensteinParams& p, int radius) {
    if (!(p.s.real() >= 4.0))
        throw std::domain_error("f_brute: oracle regime needs sigma >= 4");
    if (radius < 1) throw std::domain_error("f_brute: radius < 1");

    const cplx z = p.z();
    const PowPlan plan = PowPlan::make(p.s);
    const long long r = radius;

    std::vector<cplx> mphase(static_cast<size_t>(2 * r + 1));
    for (long long m = -r; m <= r; ++m)
        mphase[static_cast<size_t>(m + r)] = e_of((p.alpha + static_cast<double>(m)) * p.mu);

    const int workers = default_workers();
    const long long rows = 2 * r + 1;
    struct Slot {
        cplx sum{0.0, 0.0};
        cplx neg{0.0, 0.0};
    };
    std::vector<Slot> slots(static_cast<size_t>(rows));

    parallel_for(rows, workers, [&](long long row) {
        const long long n = row - r;
        const double bn = p.beta + static_cast<double>(n);
        const cplx nph = e_of(bn * p.nu);
        const cplx cz = bn * z;
        const bool real_row = (bn == 0.0);
        KahanSum acc, neg;
        for (long long m = -r; m <= r; ++m) {
            const double am = p.alpha + static_cast<double>(m);
            if (real_row && am == 0.0) continue; // the impossible term
            const cplx base = cplx{am, 0.0} + cz;
            const cplx term = mphase[static_cast<size_t>(m + r)] * nph * plan.inv_pow(base);
            acc.add(term);
            if (real_row && am < 0.0) neg.add(term);
        }
        slots[static_cast<size_t>(row)] = {acc.total(), neg.total()};
    });

    KahanSum total, negrow;
    for (const auto& sl : slots) {
        total.add(sl.sum);
        negrow.add(sl.neg);
    }

    const double sigma = p.s.real();
    const double c0 = lattice_gap(z);
    const double tail =
        2.0 * 8.0 * std::pow(c0, -sigma) * std::pow(static_cast<double>(radius), 2.0 - sigma) /
        (sigma - 2.0);
    return {total.total(), negrow.total(), tail};
}

} // namespace

BruteResult f_brute(const EisensteinParams& p, int radius) {
    const BruteRaw raw = brute_core(p, radius);
    // minus-branch summands on the negative real axis differ by e(s) exactly
    const cplx swing = e_of(p.s) - 1.0;
    BruteResult out;
    out.plus = {raw.plus, raw.tail, (2LL * radius + 1) * (2LL * radius + 1)};
    out.minus = {raw.plus + swing * raw.negrow, raw.tail, out.plus.terms_used};
    out.mean = {raw.plus + 0.5 * swing * raw.negrow, raw.tail, out.plus.terms_used};
    return out;
}

EvalResult f_brute_branch(const EisensteinParams& p, Branch b, int radius) {
    const BruteResult r = f_brute(p, radius);
    return (b == Branch::plus) ? r.plus : r.minus;
}

cplx abc_A(const EisensteinParams& p, const Truncation& t, bool functional_form) {
    const cplx s = p.s;
    if (!functional_form) {
        const cplx n = psi_lerch({s, -p.alpha, -p.mu}, t).value;
        const cplx q = psi_lerch({s, p.alpha, p.mu}, t).value;
        return std::cos(pi * s) * n + q;
    }
    const cplx p1 = psi_lerch({1.0 - s, -p.mu, p.alpha}, t).value;
    const cplx p2 = psi_lerch({1.0 - s, p.mu, -p.alpha}, t).value;
    const cplx rot = std::exp(cplx{0.0, -pi / 2} * s);
    return e_of(p.alpha * p.mu) * powc(two_pi, s) * 0.5 * reciprocal_gamma(s) *
           (rot * p1 + p2 / rot);
}

cplx abc_B1(const EisensteinParams& p, const Truncation& t, bool functional_form) {
    const cplx s = p.s;
    if (!functional_form) {
        const cplx n = psi_lerch({s, -p.alpha, -p.mu}, t).value;
        return iunit * std::sin(pi * s) * n;
    }
    const cplx p1 = psi_lerch({1.0 - s, -p.mu, p.alpha}, t).value;
    const cplx p2 = psi_lerch({1.0 - s, p.mu, -p.alpha}, t).value;
    const cplx rot = std::exp(cplx{0.0, pi / 2} * (1.0 - s));
    return iunit * e_of(p.alpha * p.mu) * powc(two_pi, s) * 0.5 * reciprocal_gamma(s) *
           (rot * p1 + p2 / rot);
}

cplx abc_B2(const EisensteinParams& p, const Truncation& t, bool functional_form) {
    const cplx s = p.s;
    if (!functional_form) {
        const cplx n = psi_lerch({s, -p.beta, -p.nu}, t).value;
        const cplx q = psi_lerch({s, p.beta, p.nu}, t).value;
        const cplx rot = std::exp(cplx{0.0, pi / 2} * s);
        return rot * n + q / rot;
    }
    const cplx p1 = psi_lerch({1.0 - s, p.nu, -p.beta}, t).value;
    return e_of(p.beta * p.nu) * powc(two_pi, s) * reciprocal_gamma(s) * p1;
}

AbcCoeffs abc_coeffs(const EisensteinParams& p, const Truncation& t) {
    const bool functional = p.s.real() >= 1.0;
    return {abc_A(p, t, functional), abc_B1(p, t, functional), abc_B2(p, t, functional)};
}

EvalResult f_qform(const EisensteinParams& p, const Truncation& t) {
    const cplx s = p.s;
    const cplx z = p.z();
    EvalResult out;
    if (delta_int(p.beta) == 1.0) out.value += abc_A(p, t, s.real() >= 1.0);

    const cplx rg = reciprocal_gamma(s);
    if (rg != cplx{0.0, 0.0}) {
        const EvalResult s1 = s_eval({1.0 - s, p.beta, -p.mu, p.nu, p.alpha, z, false}, t);
        const EvalResult s2 = s_eval({1.0 - s, -p.beta, p.mu, -p.nu, -p.alpha, z, false}, t);
        const cplx pref = e_of(p.alpha * p.mu) * powc(two_pi, s) * rg;
        const cplx rot = std::exp(cplx{0.0, -pi / 2} * s);
        out.value += pref * (rot * s1.value + s2.value / rot);
        out.error_estimate += std::abs(pref) * (std::abs(rot) * s1.error_estimate +
                                                s2.error_estimate / std::abs(rot));
        out.terms_used += s1.terms_used + s2.terms_used;
    }
    return out;
}

namespace {

void require_noninteger_s(cplx s) {
    const double d = std::hypot(s.real() - std::round(s.real()), s.imag());
    if (d < 1e-6)
        throw std::domain_error("asymptotic ops refuse s within 1e-6 of an integer "
                                "(integer weights go through the identities module)");
}

} // namespace

AsymptoticSJ asymptotic_SJ(const EisensteinParams& p, const ExpansionOrder& o,
                           const Truncation& t) {
    if (o.J < 0) throw std::domain_error("asymptotic_SJ: J < 0");
    const cplx s = p.s;
    require_noninteger_s(s);
    if (!(s.real() > -static_cast<double>(o.J)))
        throw std::domain_error("asymptotic_SJ: needs sigma > -J");

    const bool functional = s.real() >= 1.0;
    AsymptoticSJ out;
    out.main = {0.0, 0.0};
    if (delta_int(p.beta) == 1.0) out.main += abc_B1(p, t, functional);
    if (delta_int(p.alpha) == 1.0) out.main += abc_B2(p, t, functional) * powz(p.tau, -s);

    const auto fb = frac_parts(p.beta);
    const CoeffTable ct = coeff_C(o.J, cplx{fb.frac, 0.0}, cover_e(p.nu));
    KahanSum series;
    for (int j = -1; j <= o.J - 1; ++j) {
        const cplx ck = ct[j + 1];
        if (ck == cplx{0.0, 0.0}) continue;
        const cplx term = ipow(iunit, j + 1) * pochhammer(s, j) / factorial(j + 1) *
                          psi_lerch({s + static_cast<double>(j), -p.alpha, -p.mu}, t).value *
                          ck * ipow(p.tau, j);
        series.add(term);
    }
    out.series = 2.0 * std::sin(pi * s) * series.total();
    return out;
}

EvalResult remainder_subtraction(const EisensteinParams& p, const ExpansionOrder& o,
                                 const Truncation& t) {
    const EvalResult f = f_qform(p, t);
    const AsymptoticSJ sj = asymptotic_SJ(p, o, t);
    return {f.value - sj.main - sj.series, f.error_estimate, f.terms_used};
}

namespace {

// adaptive Simpson for complex integrands on a real interval
cplx adaptive_simpson(const std::function<cplx(double)>& f, double a, double b, cplx fa,
                      cplx fm, cplx fb, double atol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const cplx flm = f(lm), frm = f(rm);
    const cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const cplx split = left + right;
    if (depth <= 0 || std::abs(split - whole) < 15.0 * atol)
        return split + (split - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, 0.5 * atol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, 0.5 * atol, depth - 1);
}

cplx integrate_line(const std::function<cplx(double)>& f, double lo, double hi, double atol) {
    // fixed panels of width <= 2 keep the oscillatory decay resolved
    const int panels = std::max(8, static_cast<int>(std::ceil((hi - lo) / 2.0)));
    KahanSum acc;
    const double w = (hi - lo) / panels;
    for (int i = 0; i < panels; ++i) {
        const double a = lo + i * w;
        const double b = a + w;
        const double m = 0.5 * (a + b);
        acc.add(adaptive_simpson(f, a, b, f(a), f(m), f(b), atol / panels, 12));
    }
    return acc.total();
}

} // namespace

EvalResult remainder_mellin_barnes_at(const EisensteinParams& p, const ExpansionOrder& o,
                                      double u, const Truncation& t) {
    if (o.J < 1) throw std::domain_error("remainder_mellin_barnes: J must be >= 1");
    const cplx s = p.s;
    require_noninteger_s(s);
    const double sigma = s.real();
    const double lo = std::max(-sigma, static_cast<double>(o.J) - 1.0);
    if (!(u > lo && u < static_cast<double>(o.J)))
        throw std::domain_error("remainder_mellin_barnes: abscissa outside admissible interval");
    if (!(sigma + u > 1.0))
        throw std::domain_error("remainder_mellin_barnes: needs sigma + u > 1");
    if (!(std::abs(std::arg(p.tau)) <= pi / 2 - 0.1))
        throw std::domain_error("remainder_mellin_barnes: needs |arg tau| <= pi/2 - 0.1");

    const cplx log_zp = std::log(iunit * p.tau);   // e^{+pi i/2} tau
    const cplx log_zm = std::log(-iunit * p.tau);  // e^{-pi i/2} tau
    const cplx rgs = reciprocal_gamma(s);

    auto integrand = [&](double v) -> cplx {
        const cplx w{u, v};
        const cplx g = gamma_fn(s + w) * gamma_fn(-w) * rgs;
        const cplx zp = psi_bilateral(s + w, p.alpha, p.mu, Branch::plus, t).value;
        const cplx zm = psi_bilateral(s + w, p.alpha, p.mu, Branch::minus, t).value;
        const cplx pp = psi_lerch({-w, p.beta, p.nu}, t).value;
        const cplx pm = psi_lerch({-w, -p.beta, -p.nu}, t).value;
        return g * (zp * pp * std::exp(w * log_zp) + zm * pm * std::exp(w * log_zm));
    };

    const double L = t.contour_half_length;
    const double scale = std::abs(integrand(0.0)) + std::abs(integrand(1.0));
    const double atol = std::max(1e-16, 0.02 * t.tol * scale);
    const cplx val = integrate_line(integrand, -L, L, atol) / two_pi;
    // the integrand decays like e^{-(pi/2-|arg tau|)|v|}; bound the cut tail
    const double rate = pi / 2 - std::abs(std::arg(p.tau));
    const double tail = std::abs(integrand(L)) / std::max(rate, 0.05) / two_pi +
                        std::abs(integrand(-L)) / std::max(rate, 0.05) / two_pi;
    return {val, atol + tail, 0};
}

EvalResult remainder_mellin_barnes(const EisensteinParams& p, const ExpansionOrder& o,
                                   const Truncation& t) {
    const double lo = std::max(-p.s.real(), static_cast<double>(o.J) - 1.0);
    const double u = 0.5 * (lo + static_cast<double>(o.J));
    return remainder_mellin_barnes_at(p, o, u, t);
}

RefinedRemainder remainder_refined(const EisensteinParams& p, const ExpansionOrder& o,
                                   const Truncation& t) {
    if (o.J < 1) throw std::domain_error("remainder_refined: J must be >= 1");
    if (o.K < 0) throw std::domain_error("remainder_refined: K < 0");
    const cplx s = p.s;
    require_noninteger_s(s);
    const double sigma = s.real();
    if (!(sigma > 1.0 - static_cast<double>(o.J)))
        throw std::domain_error("remainder_refined: needs sigma > 1 - J");
    if (o.K > 0 && !(sigma > 1.0 - static_cast<double>(o.J) - static_cast<double>(o.K)))
        throw std::domain_error("remainder_refined: needs sigma > 1 - J - K");
    const int et = p.epsilon_tau();
    if (et == 0)
        throw std::domain_error("remainder_refined: needs 0 < |arg tau| < pi/2 (strict sectors)");

    const cplx z = p.z();
    RefinedRemainder out;

    // exponentially small q-hat series
    const EvalResult s1 = s_eval({1.0 - s, p.alpha, p.nu, p.mu, -p.beta, z, true}, t);
    const EvalResult s2 = s_eval({1.0 - s, -p.alpha, -p.nu, -p.mu, p.beta, z, true}, t);
    const cplx stokes = std::exp(cplx{0.0, pi * et} * s);
    const cplx po2t = powz(two_pi / p.tau, s);
    out.qhat_part = e_of(p.beta * p.nu) * po2t * reciprocal_gamma(s) *
                    (s1.value + stokes * s2.value);

    // S*_J: double sums of F_{s,J} values, the second with the rotated argument
    const double am0 = frac_parts(-p.alpha).frac_prime;
    const double np0 = frac_parts(p.nu).frac_prime;
    const double nm0 = frac_parts(-p.nu).frac_prime;
    const double abst = std::abs(p.tau);
    const double argt = std::arg(p.tau);

    // The F_{s,J} values decay only polynomially in m n / |tau|; the cutoff
    // keeps a fixed depth below the leading term (the downstream subtraction
    // against S*_{J,K} needs ~1e-8 relative, not t.tol).
    const double star_cut = 0.01 * std::max(t.tol, 1e-12);
    auto sstar_sum = [&](double n0, double beta_sign, double theta) -> cplx {
        KahanSum acc;
        double first_mag = -1.0;
        long long used = 0;
        for (long long jm = 0;; ++jm) {
            const double xm = am0 + static_cast<double>(jm);
            double row_max = 0.0;
            KahanSum row;
            for (long long jn = 0;; ++jn) {
                const double xn = n0 + static_cast<double>(jn);
                const CoverPoint zc{two_pi * xm * xn / abst, theta};
                const cplx fv = f_sJ(s, o.J, zc, t).value;
                const cplx term = e_of(xm * (-p.mu) + xn * beta_sign * p.beta) *
                                  powc(xn, s - 1.0) * fv;
                row.add(term);
                ++used;
                const double mag = std::abs(term);
                row_max = std::max(row_max, mag);
                if (first_mag < 0.0) first_mag = std::max(mag, 1e-300);
                if (used > t.max_terms)
                    throw budget_error("remainder_refined: S* budget exhausted",
                                       {acc.total(), first_mag, used});
                if (jn >= 3 && mag < star_cut * first_mag) break;
            }
            acc.add(row.total());
            if (jm >= 3 && row_max < star_cut * first_mag) break;
        }
        return acc.total();
    };

    const cplx sum1 = sstar_sum(np0, -1.0, -argt);
    const cplx sum2 = sstar_sum(nm0, +1.0, et * pi - argt);
    out.sstar = sum1 - stokes * sum2;

    out.sstar_part = e_of(p.beta * p.nu) * (o.J % 2 == 0 ? 1.0 : -1.0) * pochhammer(s, o.J) *
                     po2t * reciprocal_gamma(s) * reciprocal_gamma(1.0 - s) * out.sstar;

    // S*_{J,K} asymptotic series: the residue sum of the contour integral
    // behind S*_J at w = -s-J-k, k < K, with the phase -(-1)^k eps^{J+k+1}
    // from the residue computation (cross-checked against the refined
    // remainder's scaling law).
    cplx series{0.0, 0.0};
    if (o.K > 0) {
        const auto fb = frac_parts(p.beta);
        const CoeffTable ct = coeff_C(o.J + o.K, cplx{fb.frac, 0.0}, cover_e(p.nu));
        const cplx base2pi = two_pi * std::exp(cplx{0.0, -et * pi / 2});
        const cplx pref = e_of(-p.beta * p.nu) * powz(base2pi, 1.0 - s);
        const cplx etau = std::exp(cplx{0.0, -et * pi / 2}) * p.tau;
        KahanSum acc;
        for (int k = 0; k < o.K; ++k) {
            const cplx ck = ct[o.J + k + 1];
            if (ck == cplx{0.0, 0.0}) continue;
            const double eps_pow = ((o.J + k + 1) % 2 == 0 || et > 0) ? 1.0 : -1.0;
            const double phase = -((k % 2 == 0) ? 1.0 : -1.0) * eps_pow;
            const cplx term =
                phase * pochhammer(s + static_cast<double>(o.J), k) /
                factorial(o.J + k + 1) *
                psi_lerch({s + static_cast<double>(o.J + k), -p.alpha, -p.mu}, t).value * ck *
                powz(etau, s + static_cast<double>(o.J + k));
            acc.add(term);
        }
        series = pref * acc.total();
    }
    out.sstar_series = series;
    out.rstar = {out.sstar - series, std::abs(out.sstar) * t.tol, 0};
    return out;
}

} // namespace eisenzeta
