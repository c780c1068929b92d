#include "eisenzeta/identities.hpp"

#include <algorithm>
#include <sstream>

#include "eisenzeta/coeffs.hpp"
#include "eisenzeta/lerch.hpp"
#include "eisenzeta/qseries.hpp"

namespace eisenzeta {

namespace {

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

// psi(k, g, kp): closed form for k <= 0, series continuation otherwise
cplx psi_at_int(int k, double g, double kp, const Truncation& t) {
    if (k <= 0) return psi_special(-k, g, kp);
    return psi_lerch({cplx(static_cast<double>(k), 0.0), g, kp}, t).value;
}

cplx s_at(int k, double g, double d, double kp, double la, cplx z, bool dual,
          const Truncation& t) {
    return s_eval({cplx(static_cast<double>(k), 0.0), g, d, kp, la, z, dual}, t).value;
}

std::string fmt_params(int k, double a, double b, double m, double n, cplx tau) {
    std::ostringstream os;
    os << "k=" << k << " alpha=" << a << " beta=" << b << " mu=" << m << " nu=" << n
       << " tau=(" << tau.real() << "," << tau.imag() << ")";
    return os.str();
}

} // namespace

IdentityReport make_identity_report(cplx lhs, cplx rhs, std::string params,
                                    std::string route_notes) {
    IdentityReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.abs_residual = std::abs(lhs - rhs);
    rep.rel_residual = rep.abs_residual / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    rep.params = std::move(params);
    rep.route_notes = std::move(route_notes);
    return rep;
}

IdentityReport ramanujan_check(int k, double alpha, double beta, double mu, double nu,
                               cplx tau, bool variant, const Truncation& t) {
    if (k == 1 && (frac_parts(alpha).is_int || frac_parts(beta).is_int))
        throw std::domain_error("ramanujan_check: k = 1 needs alpha, beta non-integral");
    const cplx z = z_from_tau(tau);
    const double sign_k = (k % 2 == 0) ? -1.0 : 1.0; // (-1)^{k-1}

    const auto fa = frac_parts(alpha);
    const auto fb = frac_parts(beta);

    cplx lhs{0.0, 0.0};
    cplx rhs{0.0, 0.0};
    if (!variant) {
        if (delta_int(beta) == 1.0) lhs += psi_at_int(k, -mu, alpha, t);
        lhs += s_at(k, beta, -mu, nu, alpha, z, false, t);
        lhs += sign_k * s_at(k, -beta, mu, -nu, -alpha, z, false, t);
        lhs *= e_of(alpha * mu);
        if (k + 1 >= 0) {
            const CoeffTable ca = coeff_C(k + 1, cplx{fa.frac, 0.0}, cover_e(mu));
            const CoeffTable cb = coeff_C(k + 1, cplx{fb.frac, 0.0}, cover_e(nu));
            KahanSum poly;
            for (int j = 0; j <= k + 1; ++j)
                poly.add(ipow(-iunit, j) * ca[j] * cb[k + 1 - j] /
                         (factorial(j) * factorial(k + 1 - j)) * ipow(tau, k - j));
            lhs -= ipow(cplx{-two_pi, 0.0}, k) * poly.total();
        }

        if (delta_int(alpha) == 1.0) rhs += psi_at_int(k, nu, -beta, t);
        rhs += s_at(k, alpha, nu, mu, -beta, z, true, t);
        rhs += sign_k * s_at(k, -alpha, -nu, -mu, beta, z, true, t);
        rhs *= e_of(beta * nu) * ipow(-iunit * tau, k - 1);
    } else {
        if (delta_int(alpha) == 1.0) lhs += psi_at_int(k, nu, -beta, t);
        lhs += s_at(k, alpha, nu, mu, -beta, z, false, t);
        lhs += sign_k * s_at(k, -alpha, -nu, -mu, beta, z, false, t);
        lhs *= e_of(beta * nu);
        if (k + 1 >= 0) {
            const CoeffTable ca = coeff_C(k + 1, cplx{fa.frac, 0.0}, cover_e(mu));
            const CoeffTable cb = coeff_C(k + 1, cplx{fb.frac, 0.0}, cover_e(nu));
            KahanSum poly;
            for (int j = 0; j <= k + 1; ++j)
                poly.add(ipow(iunit, j) * cb[j] * ca[k + 1 - j] /
                         (factorial(j) * factorial(k + 1 - j)) * ipow(tau, k - j));
            lhs -= ipow(cplx{-two_pi, 0.0}, k) * poly.total();
        }

        if (delta_int(beta) == 1.0) rhs += psi_at_int(k, -mu, alpha, t);
        rhs += s_at(k, beta, -mu, nu, alpha, z, true, t);
        rhs += sign_k * s_at(k, -beta, mu, -nu, -alpha, z, true, t);
        rhs *= e_of(alpha * mu) * ipow(iunit * tau, k - 1);
    }

    return make_identity_report(lhs, rhs, fmt_params(k, alpha, beta, mu, nu, tau),
                                variant ? "variant display" : "primary display");
}

IdentityReport euler_even(int k, const Truncation& t) {
    if (k < 1 || k > 20) throw std::domain_error("euler_even: k must be in [1, 20]");
    const cplx lhs = hurwitz_zeta(cplx(2.0 * k, 0.0), 1.0, t).value;
    const auto b = bernoulli_numbers(2 * k);
    const double sign = (k % 2 == 1) ? 1.0 : -1.0; // (-1)^{k+1}
    const cplx rhs = sign * std::pow(two_pi, 2 * k) * b[static_cast<size_t>(2 * k)] /
                     (2.0 * factorial(2 * k));
    std::ostringstream os;
    os << "k=" << k;
    return make_identity_report(lhs, rhs, os.str());
}

IdentityReport ramanujan_odd(int k, cplx tau, const Truncation& t) {
    if (k == 0) throw std::domain_error("ramanujan_odd: k must be nonzero");
    const cplx z = z_from_tau(tau);

    cplx zeta_val;
    if (k >= 1) {
        zeta_val = hurwitz_zeta(cplx(2.0 * k + 1.0, 0.0), 1.0, t).value;
    } else {
        const int h = -(2 * k + 1); // zeta(-h) = -B_{h+1}/(h+1) - delta_{h0}
        const auto b = bernoulli_numbers(h + 1);
        zeta_val = -b[static_cast<size_t>(h + 1)] / (h + 1.0);
    }

    cplx lhs = zeta_val + 2.0 * s_at(2 * k + 1, 0.0, 0.0, 0.0, 0.0, z, false, t);
    if (k + 1 >= 0) {
        const auto b = bernoulli_numbers(std::max(0, 2 * k + 2));
        KahanSum poly;
        for (int j = 0; j <= k + 1; ++j) {
            const int other = 2 * k + 2 - 2 * j;
            const double sign = (j % 2 == 0) ? 1.0 : -1.0;
            poly.add(sign * b[static_cast<size_t>(2 * j)] * b[static_cast<size_t>(other)] /
                     (factorial(2 * j) * factorial(other)) * ipow(tau, 2 * k + 1 - 2 * j));
        }
        lhs += std::pow(two_pi, 2 * k + 1) * poly.total();
    }

    const double signk = (k % 2 == 0) ? 1.0 : -1.0;
    const cplx rhs = signk * ipow(tau, 2 * k) *
                     (zeta_val + 2.0 * s_at(2 * k + 1, 0.0, 0.0, 0.0, 0.0, z, true, t));
    return make_identity_report(lhs, rhs, fmt_params(k, 0, 0, 0, 0, tau));
}

cplx fprime_route_qform(int k, double alpha, double beta, double mu, double nu, cplx tau,
                        const Truncation& t) {
    (void)nu;
    const cplx z = z_from_tau(tau);
    const int sign_k = (k % 2 == 0) ? -1 : 1; // (-1)^{k-1}
    const cplx pref = e_of(alpha * mu) * ipow(two_pi * iunit, 1 - k) * factorial(k - 1);

    cplx val{0.0, 0.0};
    if (delta_int(beta) == 1.0) {
        // the delta(beta) factor comes from the proof's delta(beta) A'(1-k)
        val += 0.5 * pref *
               (static_cast<double>(sign_k) * psi_at_int(k, mu, -alpha, t) +
                psi_at_int(k, -mu, alpha, t));
    }
    val += pref * (s_at(k, beta, -mu, nu, alpha, z, false, t) +
                   static_cast<double>(sign_k) * s_at(k, -beta, mu, -nu, -alpha, z, false, t));
    return val;
}

cplx fprime_route_expansion(int k, double alpha, double beta, double mu, double nu, cplx tau,
                            const Truncation& t) {
    const cplx z = z_from_tau(tau);
    const int sign_k = (k % 2 == 0) ? -1 : 1; // (-1)^{k-1}
    cplx val{0.0, 0.0};

    if (delta_int(beta) == 1.0) {
        val += -0.5 * e_of(alpha * mu) * ipow(two_pi * iunit, 1 - k) * factorial(k - 1) *
               (psi_at_int(k, -mu, alpha, t) -
                static_cast<double>(sign_k) * psi_at_int(k, mu, -alpha, t));
    }
    if (delta_int(alpha) == 1.0) {
        val += e_of(beta * nu) * ipow(-two_pi / tau, 1 - k) * factorial(k - 1) *
               psi_at_int(k, nu, -beta, t);
    }

    const auto fa = frac_parts(alpha);
    const auto fb = frac_parts(beta);
    const CoeffTable ca = coeff_C(k + 1, cplx{fa.frac, 0.0}, cover_e(mu));
    const CoeffTable cb = coeff_C(k + 1, cplx{fb.frac, 0.0}, cover_e(nu));
    KahanSum poly;
    for (int j = -1; j <= k; ++j) {
        poly.add(ipow(iunit, j + 1) * factorial(k - 1) /
                 (factorial(j + 1) * factorial(k - j)) * ca[k - j] * cb[j + 1] * ipow(tau, j));
    }
    val += two_pi * poly.total();

    // the differentiated-remainder piece carries a (k-1)! factor alongside
    // the qhat sums (k = 2 masks it)
    val += e_of(beta * nu) * ipow(-two_pi / tau, 1 - k) * factorial(k - 1) *
           (s_at(k, alpha, nu, mu, -beta, z, true, t) +
            static_cast<double>(sign_k) * s_at(k, -alpha, -nu, -mu, beta, z, true, t));
    return val;
}

IdentityReport fprime_check(int k, double alpha, double beta, double mu, double nu, cplx tau,
                            const Truncation& t) {
    if (k < 1) throw std::domain_error("fprime_check: k must be >= 1");
    if (k == 1 && (frac_parts(alpha).is_int || frac_parts(beta).is_int))
        throw std::domain_error("fprime_check: k = 1 needs alpha, beta non-integral");
    const cplx lhs = fprime_route_qform(k, alpha, beta, mu, nu, tau, t);
    const cplx rhs = fprime_route_expansion(k, alpha, beta, mu, nu, tau, t);
    return make_identity_report(lhs, rhs, fmt_params(k, alpha, beta, mu, nu, tau),
                                "q-form vs expansion form");
}

} // namespace eisenzeta
