#include "eisenzeta/coeffs.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace eisenzeta {

namespace {

using cplxl = std::complex<long double>;

constexpr int k_max_order = 64; // double-precision budget

cplxl to_l(cplx v) { return {static_cast<long double>(v.real()), static_cast<long double>(v.imag())}; }
cplx to_d(cplxl v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

} // namespace

bool cover_projects_to_one(const CoverPoint& y) {
    if (y.modulus != 1.0) return false;
    double n = std::round(y.argument / two_pi);
    return y.argument == two_pi * n;
}

CoeffTable coeff_C(int K, cplx X, const CoverPoint& Y) {
    if (K < 0 || K > k_max_order) throw std::domain_error("coeff_C: K out of [0,64]");

    const bool clean = cover_projects_to_one(Y);
    const cplxl w = to_l(cover_pow(Y, X)); // Y~^X
    const cplxl y = to_l(Y.project());     // Y~^1
    const cplxl xl = to_l(X);

    CoeffTable table;
    table.X = X;
    table.y_modulus = Y.modulus;
    table.y_argument = Y.argument;
    table.K = K;
    table.near_resonant = !clean && std::abs(to_d(y) - cplx{1.0, 0.0}) < 1e-13;

    // Formal power-series division in long double; g_k are the raw Taylor
    // coefficients of the generating function, C_k = k! g_k.
    std::vector<cplxl> g(static_cast<size_t>(K) + 1);

    if (clean) {
        // One power of Z cancels: (W e^{XZ}) / ((e^Z - 1)/Z).
        // numerator_k = W X^k / k!, denominator_k = 1/(k+1)!.
        std::vector<cplxl> num(g.size()), den(g.size());
        cplxl xpow = 1.0L;
        long double fact = 1.0L;
        for (size_t k = 0; k < g.size(); ++k) {
            num[k] = w * xpow / fact;
            xpow *= xl;
            fact *= static_cast<long double>(k + 1);
        }
        long double fact1 = 1.0L; // (k+1)!
        for (size_t k = 0; k < g.size(); ++k) {
            fact1 *= static_cast<long double>(k + 1);
            den[k] = 1.0L / fact1;
        }
        for (size_t k = 0; k < g.size(); ++k) {
            cplxl acc = num[k];
            for (size_t j = 0; j < k; ++j) acc -= g[j] * den[k - j];
            g[k] = acc; // den[0] = 1
        }
    } else {
        // numerator_0 = 0, numerator_k = W X^{k-1}/(k-1)!;
        // denominator_0 = y - 1, denominator_k = y/k!.
        std::vector<cplxl> num(g.size()), den(g.size());
        num[0] = 0.0L;
        den[0] = y - 1.0L;
        cplxl xpow = 1.0L;
        long double fact = 1.0L;
        for (size_t k = 1; k < g.size(); ++k) {
            num[k] = w * xpow / fact;
            xpow *= xl;
            fact *= static_cast<long double>(k);
        }
        long double factk = 1.0L;
        for (size_t k = 1; k < g.size(); ++k) {
            factk *= static_cast<long double>(k);
            den[k] = y / factk;
        }
        for (size_t k = 0; k < g.size(); ++k) {
            cplxl acc = num[k];
            for (size_t j = 0; j < k; ++j) acc -= g[j] * den[k - j];
            g[k] = acc / den[0];
        }
    }

    table.entries.resize(g.size());
    long double fact = 1.0L;
    for (size_t k = 0; k < g.size(); ++k) {
        table.entries[k] = to_d(g[k] * fact);
        fact *= static_cast<long double>(k + 1);
    }
    return table;
}

std::vector<cplx> coeff_A(int K, cplx Y) {
    if (Y == cplx{0.0, 0.0}) throw std::domain_error("coeff_A: Y = 0");
    CoverPoint cover{std::abs(Y), std::arg(Y)};
    return coeff_C(K, cplx{0.0, 0.0}, cover).entries;
}

namespace {

namespace mp = boost::multiprecision;

// Exact rationals; converted to double once at the end.
std::vector<mp::cpp_rational> bernoulli_exact(int K) {
    std::vector<mp::cpp_rational> b(static_cast<size_t>(K) + 1);
    b[0] = 1;
    for (int k = 1; k <= K; ++k) {
        // binomials C(k+1, j), j = 0..k-1
        mp::cpp_int c = 1;
        mp::cpp_rational acc = 0;
        for (int j = 0; j <= k - 1; ++j) {
            acc += mp::cpp_rational(c) * b[static_cast<size_t>(j)];
            c = c * (k + 1 - j) / (j + 1);
        }
        b[static_cast<size_t>(k)] = -acc / (k + 1);
    }
    return b;
}

const std::vector<mp::cpp_rational>& bernoulli_cache() {
    static std::vector<mp::cpp_rational> cache = bernoulli_exact(k_max_order);
    return cache;
}

} // namespace

std::vector<double> bernoulli_numbers(int K) {
    if (K < 0 || K > k_max_order) throw std::domain_error("bernoulli_numbers: K out of [0,64]");
    const auto& exact = bernoulli_cache();
    std::vector<double> out(static_cast<size_t>(K) + 1);
    for (int k = 0; k <= K; ++k)
        out[static_cast<size_t>(k)] = exact[static_cast<size_t>(k)].convert_to<double>();
    return out;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    mp::cpp_int c = 1;
    for (int j = 0; j < k; ++j) c = c * (n - j) / (j + 1);
    return c.convert_to<double>();
}

cplx bernoulli_poly(int k, cplx X) {
    if (k < 0 || k > k_max_order) throw std::domain_error("bernoulli_poly: k out of [0,64]");
    const auto b = bernoulli_numbers(k);
    KahanSum acc;
    cplx xpow = 1.0;
    // sum_j C(k,j) B_j X^{k-j}, accumulated from j = k downward so xpow runs up
    for (int j = k; j >= 0; --j) {
        acc.add(binomial(k, j) * b[static_cast<size_t>(j)] * xpow);
        xpow *= X;
    }
    return acc.total();
}

} // namespace eisenzeta
