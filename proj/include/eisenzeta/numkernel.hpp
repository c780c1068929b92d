#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace eisenzeta {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;
inline const cplx iunit{0.0, 1.0};

// Thrown when an evaluator is asked for a value at a pole (r = 1 with
// integral twist, gamma at a non-positive integer, ...).
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct EvalResult {
    cplx value{0.0, 0.0};
    double error_estimate = 0.0;   // truncation only; rounding is budgeted by callers
    long long terms_used = 0;
};

// Tolerance was not reached within the term budget; carries the best value.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what, EvalResult best)
        : std::runtime_error(what), best_value(best) {}
    EvalResult best_value;
};

// Per-evaluation budget shared by every series/quadrature evaluator.
struct Truncation {
    long long max_terms = 200000;
    double tol = 1e-12;                // relative
    double contour_half_length = 40.0; // |Im w| cutoff for vertical quadrature

    Truncation() = default;
    Truncation(long long mt, double t, double chl)
        : max_terms(mt), tol(t), contour_half_length(chl) {
        if (max_terms < 8) throw std::domain_error("Truncation: max_terms < 8");
        if (!(tol >= 0x1p-50)) throw std::domain_error("Truncation: tol below 2^-50");
        if (!(contour_half_length > 0)) throw std::domain_error("Truncation: bad contour length");
    }
};

// e(s) = exp(2 pi i s), always evaluated through exp, never as a power of a
// stored base.
inline cplx e_of(cplx s) { return std::exp(cplx{0.0, two_pi} * s); }
inline cplx e_of(double s) {
    // real shortcut keeps |e(s)| = 1 to the last bit
    return {std::cos(two_pi * s), std::sin(two_pi * s)};
}

struct FracParts {
    double frac;        // <x> in [0,1)
    double frac_prime;  // <x>' in (0,1]: <x> off the integers, 1 on them
    bool is_int;        // bit-level integrality
};

inline FracParts frac_parts(double x) {
    double f = x - std::floor(x);
    bool isint = (x == std::floor(x));
    if (f >= 1.0) f = std::nextafter(1.0, 0.0); // tiny negative x rounds up
    if (isint) f = 0.0;
    return {f, isint ? 1.0 : f, isint};
}

// delta(x): 1 if x is exactly an integer, else 0. A hard combinatorial
// switch, not a numeric limit; callers who mean "integer up to noise" round first.
inline double delta_int(double x) { return frac_parts(x).is_int ? 1.0 : 0.0; }

// A point on the universal cover of the punctured plane: modulus plus
// unbounded real argument. Arguments differing by 2 pi are distinct points.
struct CoverPoint {
    double modulus;
    double argument;

    CoverPoint(double mod, double arg) : modulus(mod), argument(arg) {
        if (!(mod > 0.0)) throw std::domain_error("CoverPoint: modulus must be positive");
    }
    cplx project() const { return modulus * cplx{std::cos(argument), std::sin(argument)}; }
    CoverPoint reciprocal() const { return {1.0 / modulus, -argument}; } // 1~/Y~
};

inline CoverPoint cover_one() { return {1.0, 0.0}; }
// e~(kappa): log = 2 pi i kappa
inline CoverPoint cover_e(double kappa) { return {1.0, two_pi * kappa}; }

// Y~^X = exp(X (log|Y~| + i arg Y~)); single-valued on the cover.
inline cplx cover_pow(const CoverPoint& y, cplx x) {
    return std::exp(x * cplx{std::log(y.modulus), y.argument});
}

// Y~^1 as a plain complex number (the denominator switch of the C_k series).
inline cplx cover_proj1(const CoverPoint& y) { return y.project(); }

enum class Branch { plus, minus };

// arg with the +/- boundary convention: plus takes (-pi, pi], minus [-pi, pi).
// They differ only on the negative real axis.
inline double arg_branch(cplx base, Branch b) {
    double a = std::atan2(base.imag(), base.real());
    if (base.imag() == 0.0 && base.real() < 0.0)
        a = (b == Branch::plus) ? pi : -pi;
    return a;
}

// base^s with the selected boundary branch of arg(base).
inline cplx branch_pow(cplx base, cplx s, Branch b) {
    if (base == cplx{0.0, 0.0}) throw std::domain_error("branch_pow: zero base");
    return std::exp(s * cplx{std::log(std::abs(base)), arg_branch(base, b)});
}

// tau <-> z: z = i tau maps the right half-plane sector |arg tau| < pi/2
// onto the upper half-plane.
inline cplx z_from_tau(cplx tau) {
    if (!(std::abs(std::arg(tau)) < pi / 2))
        throw std::domain_error("z_from_tau: tau outside |arg tau| < pi/2");
    return iunit * tau;
}
inline cplx tau_from_z(cplx z) {
    if (!(z.imag() > 0.0)) throw std::domain_error("tau_from_z: z not in upper half-plane");
    return -iunit * z;
}

// q = e(z), qhat = e(-1/z). Any power q^x means e(x z): the multivaluedness
// is resolved by z, never by the stored q.
inline cplx q_from_z(cplx z) { return e_of(z); }
inline cplx qhat_from_z(cplx z) { return e_of(-1.0 / z); }
inline cplx q_pow(cplx x, cplx z) { return e_of(x * z); }

// Neumaier-compensated accumulator; mandatory in every series accumulator.
class KahanSum {
public:
    void add(cplx v) {
        add_part(re_, ce_, v.real());
        add_part(im_, ci_, v.imag());
    }
    cplx total() const { return {re_ + ce_, im_ + ci_}; }

private:
    static void add_part(double& s, double& c, double v) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    }
    double re_ = 0, ce_ = 0, im_ = 0, ci_ = 0;
};

} // namespace eisenzeta
