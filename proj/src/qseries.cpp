#include "eisenzeta/qseries.hpp"

#include <algorithm>

namespace eisenzeta {

namespace {

constexpr double resonance_floor = 1e-14;

inline cplx powc(double base, cplx e) { return std::exp(e * std::log(base)); }

struct Geometry {
    double x0;      // first l-index value <delta>'
    double gp;      // <gamma>'
    double absq;    // |q|
    double im2pi;   // 2 pi Im z_eff
};

Geometry geometry(const SArgs& a) {
    Geometry g;
    g.x0 = frac_parts(a.delta).frac_prime;
    g.gp = frac_parts(a.gamma).frac_prime;
    const cplx ze = a.z_effective();
    g.im2pi = two_pi * ze.imag();
    g.absq = std::exp(-g.im2pi);
    return g;
}

// bound for sum_{x >= X} x^{-Re r} |q|^{gp x} / (1 - |q|^x), x stepping by 1
double tail_from(const Geometry& g, cplx r, double X) {
    const double m = std::max(0.0, -r.real());
    const double den = 1.0 - std::exp(-g.im2pi * X);
    double first = std::pow(X, -r.real()) * std::exp(-g.gp * g.im2pi * X) / den;
    const double ratio = std::exp(-g.gp * g.im2pi) * std::pow((X + 1.0) / X, m);
    if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
    return first / (1.0 - ratio);
}

} // namespace

double s_tail_bound(const SArgs& a, long long L) {
    const Geometry g = geometry(a);
    return tail_from(g, a.r, g.x0 + static_cast<double>(L));
}

EvalResult s_eval(const SArgs& a, const Truncation& t) {
    const Geometry g = geometry(a);
    const cplx ze = a.z_effective();
    const cplx ekappa = e_of(a.kappa);
    const cplx pref = e_of(g.gp * a.kappa);

    KahanSum sum;
    long long used = 0;
    double bound = std::numeric_limits<double>::infinity();
    for (long long l = 0; l < t.max_terms; ++l) {
        const double x = g.x0 + static_cast<double>(l);
        const cplx qx = q_pow(cplx{x, 0.0}, ze);
        const cplx den = 1.0 - ekappa * qx;
        if (std::abs(den) < resonance_floor)
            throw std::domain_error("s_eval: resonant geometric denominator");
        const cplx term = e_of(x * a.lambda) * q_pow(cplx{g.gp * x, 0.0}, ze) /
                          (powc(x, a.r) * den);
        sum.add(term);
        used = l + 1;
        if (l >= 7) {
            bound = tail_from(g, a.r, x + 1.0);
            if (bound <= t.tol * std::max(std::abs(sum.total()), 1e-300)) {
                return {pref * sum.total(), bound, used};
            }
        }
    }
    throw budget_error("s_eval: tail bound not reached in budget",
                       {pref * sum.total(), bound, used});
}

EvalResult s_eval_double(const SArgs& a, const Truncation& t) {
    const Geometry g = geometry(a);
    const cplx ze = a.z_effective();
    const double y0 = g.gp; // first k-index value <gamma>'

    KahanSum sum;
    long long used = 0;
    double outer_first = 0.0;
    for (long long k = 0;; ++k) {
        const double y = y0 + static_cast<double>(k);
        KahanSum row;
        double row_first = 0.0;
        for (long long l = 0;; ++l) {
            const double x = g.x0 + static_cast<double>(l);
            const cplx term = e_of(y * a.kappa + x * a.lambda) *
                              q_pow(cplx{y * x, 0.0}, ze) / powc(x, a.r);
            row.add(term);
            if (++used > t.max_terms)
                throw budget_error("s_eval_double: budget exhausted",
                                   {sum.total(), outer_first, used});
            const double mag = std::abs(term);
            if (l == 0) row_first = mag;
            if (l >= 7 && mag < 0.05 * t.tol * (std::abs(sum.total()) + row_first + 1e-300))
                break;
        }
        sum.add(row.total());
        if (k == 0) outer_first = std::abs(row.total());
        const double rowmag = std::abs(row.total());
        if (k >= 7 && rowmag < 0.05 * t.tol * (std::abs(sum.total()) + 1e-300)) break;
    }
    return {sum.total(), t.tol * std::abs(sum.total()), used};
}

} // namespace eisenzeta
