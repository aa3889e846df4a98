#pragma once

#include <tb/distribution.hpp>
#include <tb/errors.hpp>
#include <tb/jet.hpp>
#include <tb/quad.hpp>
#include <tb/signal.hpp>
#include <tb/specfun.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tb {

// psi_{a,b}(t) = (-1)^a d^a/dt^a delta(t-b). Pointwise support {b}; a=0 is
// the scaling function delta itself and lives outside this type.
struct impulsive_wavelet {
    long order;
    double shift;

    impulsive_wavelet(long a, double b) : order(a), shift(b) {
        if (a < 1) throw std::invalid_argument("impulsive_wavelet: order must be >= 1");
    }
};

// The dual side: psi~_{a,b}(t) = (t-b)^a / a!. The dual scaling function is
// the constant 1.
struct dual_wavelet {
    long order;
    double shift;

    dual_wavelet(long a, double b) : order(a), shift(b) {
        if (a < 1) throw std::invalid_argument("dual_wavelet: order must be >= 1");
    }

    double operator()(double t) const { return dual_wavelet_eval(order, shift, t); }

    // (t-b)^a/a! as a running product (t-b)/1 * (t-b)/2 * ...; keeps the
    // magnitude balanced instead of forming a^th powers and factorials.
    static double dual_wavelet_eval(long a, double b, double t) {
        double acc = 1.0;
        for (long k = 1; k <= a; ++k) acc *= (t - b) / static_cast<double>(k);
        return acc;
    }
};

struct energy_decomposition {
    std::string name;
    double b = 0.0;
    long order = 0;
    std::vector<double> c;       // c_{n,b} = f^(n)(b)
    std::vector<double> c_dual;  // c~_{n,b} = moment_n / n!
    std::vector<double> de;      // DE_n = c[n] * c_dual[n]
    std::vector<double> cumulative;
    double quadrature_energy = 0.0;
};

// c_{a,b} = <f, (-1)^a delta^(a)(t-b)> = f^(a)(b), always through jets.
inline double wavelet_coefficient(const signal& s, long a, double b) {
    if (a < 0) throw std::invalid_argument("wavelet_coefficient: requires a >= 0");
    auto ua = static_cast<std::size_t>(a);
    jet j = lift(s.expr, b, ua, std::max(ua, default_order_limit));
    return derivative(j, a);
}

// c~_{a,b} = (1/a!) * integral of f(t) (t-b)^a over rc.
inline double dual_coefficient(const signal& s, long a, double b,
                               const quad_options& opt = {}) {
    if (a < 0) throw std::invalid_argument("dual_coefficient: requires a >= 0");
    double m = moment(s, a, b, opt);
    if (a <= 20) {
        double f = 1.0;
        for (long k = 2; k <= a; ++k) f *= static_cast<double>(k);
        return m / f;
    }
    if (m == 0.0) return 0.0;
    double mag = std::exp(std::log(std::fabs(m)) - specfun::lgamma(static_cast<double>(a) + 1.0));
    return std::copysign(mag, m);
}

// <psi_{n,t0}, psi~_{m,t0}> by the monomial rule: the n-th derivative of
// (t-t0)^m/m! leaves (t-t0)^(m-n)/(m-n)!, which at t = t0 is the Kronecker
// delta. Exact, no quadrature.
inline double biorthogonality_check(long n, long m, double t0) {
    (void)t0;
    if (n > m) return 0.0;
    return int_pow_value(0.0, m - n) / specfun::factorial(m - n);
}

// f(t) != sum_n d_n (-1)^n delta^(n)(t-t0) with d_n = c~_{n,t0}: equality in
// the sense of identical action on smooth test functions, nothing pointwise.
inline distributional_series dual_taylor_series(const signal& s, double t0, long order,
                                                const quad_options& opt = {}) {
    if (order < 0) throw std::invalid_argument("dual_taylor_series: requires order >= 0");
    distributional_series ds;
    ds.center = t0;
    ds.coeffs.resize(static_cast<std::size_t>(order) + 1);
    for (long n = 0; n <= order; ++n)
        ds.coeffs[static_cast<std::size_t>(n)] = dual_coefficient(s, n, t0, opt);
    return ds;
}

// <phi, sum_n d_n (-1)^n delta^(n)(t-t0)> = sum_n d_n phi^(n)(t0).
inline double dist_apply(const distributional_series& ds, const expression& phi) {
    long order = static_cast<long>(ds.coeffs.size()) - 1;
    if (order < 0) return 0.0;
    auto uo = static_cast<std::size_t>(order);
    jet j = lift(phi, ds.center, uo, std::max(uo, default_order_limit));
    double acc = 0.0;
    for (long n = order; n >= 0; --n)
        acc += ds.coeffs[static_cast<std::size_t>(n)] * derivative(j, n);
    return acc;
}

// Truncated reconstruction sum_{n<=N} c_{n,b} psi~_{n,b}(t): the Taylor
// polynomial of f about b, assembled from the decomposition side.
inline double taylor_reconstruct(const signal& s, double b, long order, double t) {
    if (order < 0) throw std::invalid_argument("taylor_reconstruct: requires order >= 0");
    auto uo = static_cast<std::size_t>(order);
    jet j = lift(s.expr, b, uo, std::max(uo, default_order_limit));
    double acc = 0.0;
    for (long n = order; n >= 0; --n)
        acc += derivative(j, n) * dual_wavelet::dual_wavelet_eval(n, b, t);
    return acc;
}

// Parseval-Taylor: integral of f^2 over rc = sum_n f^(n)(b) f^(n~)(b)/n!.
// DE_n = c[n]*c_dual[n] is kept signed; cumulative[k] is the partial sum E_k.
inline energy_decomposition parseval_taylor(const signal& s, double b, long order,
                                            const quad_options& opt = {}) {
    if (order < 0) throw std::invalid_argument("parseval_taylor: requires order >= 0");
    energy_decomposition ed;
    ed.name = s.name;
    ed.b = b;
    ed.order = order;
    auto n1 = static_cast<std::size_t>(order) + 1;
    ed.c.resize(n1);
    ed.c_dual.resize(n1);
    ed.de.resize(n1);
    ed.cumulative.resize(n1);

    auto uo = static_cast<std::size_t>(order);
    jet j = lift(s.expr, b, uo, std::max(uo, default_order_limit));
    double running = 0.0;
    for (long n = 0; n <= order; ++n) {
        auto i = static_cast<std::size_t>(n);
        ed.c[i] = derivative(j, n);
        ed.c_dual[i] = dual_coefficient(s, n, b, opt);
        ed.de[i] = ed.c[i] * ed.c_dual[i];
        running += ed.de[i];
        ed.cumulative[i] = running;
    }

    auto sq = [&](double t) -> double {
        double ft;
        try {
            ft = eval(s.expr, t);
        } catch (const domain_error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return ft * ft;
    };
    ed.quadrature_energy = integrate(sq, s.rc, opt).value;
    return ed;
}

// f = Ef + Of with Ef(t) = (f(t)+f(-t))/2 and Of(t) = (f(t)-f(-t))/2, on the
// same (necessarily symmetric) rc. f(-t) is a structural substitution.
inline std::pair<signal, signal> even_odd_split(const signal& s) {
    if (!s.rc.symmetric())
        throw domain_error("even_odd_split: region of convergence must be symmetric about 0");
    expression mirrored = reflect(s.expr);
    expression half = ast::constant(0.5);
    signal even{s.name + ":even", ast::mul(half, ast::add(s.expr, mirrored)), s.rc};
    signal odd{s.name + ":odd", ast::mul(half, ast::sub(s.expr, mirrored)), s.rc};
    return {even, odd};
}

// Raw moments 0..kmax about 0; the parity-forbidden half vanishes for
// signals of definite parity (the caller asserts which half).
inline std::vector<std::pair<long, double>> moment_symmetry_report(const signal& s, long kmax,
                                                                  const quad_options& opt = {}) {
    if (!s.rc.symmetric())
        throw domain_error("moment_symmetry_report: region of convergence must be symmetric about 0");
    std::vector<std::pair<long, double>> out;
    out.reserve(static_cast<std::size_t>(kmax) + 1);
    for (long k = 0; k <= kmax; ++k) out.emplace_back(k, moment(s, k, 0.0, opt));
    return out;
}

// Psi_{a,b}(w) = (-jw)^a e^{-jwb}: polynomially growing, so the impulsive
// wavelets are neither finite-energy nor admissible, and none of that is
// needed for the decomposition.
inline std::complex<double> wavelet_spectrum(long a, double b, double w) {
    if (a < 1) throw std::invalid_argument("wavelet_spectrum: requires a >= 1");
    std::complex<double> base(0.0, -w);
    std::complex<double> acc(1.0, 0.0);
    for (long k = 0; k < a; ++k) acc *= base;
    return acc * std::exp(std::complex<double>(0.0, -w * b));
}

// F^(n)(0) = (-j)^n * integral of t^n f(t) over rc, so j^n * spectral_moment
// recovers the raw moment.
inline std::complex<double> spectral_moment(const signal& s, long n,
                                            const quad_options& opt = {}) {
    if (n < 0) throw std::invalid_argument("spectral_moment: requires n >= 0");
    double m = moment(s, n, 0.0, opt);
    switch (n & 3) {
    case 0: return {m, 0.0};
    case 1: return {0.0, -m};
    case 2: return {-m, 0.0};
    default: return {0.0, m};
    }
}

} // namespace tb
