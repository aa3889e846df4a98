#pragma once

#include <tb/errors.hpp>

#include <cmath>
#include <limits>

// Special functions backing the library's closed forms. gamma/lgamma delegate
// to the C library (well within the 1e-13 relative contract on [0.5, 50]);
// digamma and harmonic are implemented here. Positive arguments only.
namespace tb::specfun {

inline constexpr double euler_gamma = 0.57721566490153286;

inline double euler_constant() { return euler_gamma; }

inline double gamma(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw domain_error("gamma: pole at non-positive integer");
    return std::tgamma(x);
}

inline double lgamma(double x) {
    if (!(x > 0.0)) throw domain_error("lgamma: requires x > 0");
    return std::lgamma(x);
}

// psi(x) for x > 0: recurrence up to x >= 8, then the Bernoulli asymptotic
// series. Absolute error comfortably below 1e-12 (next omitted term at x=8
// is ~2e-15).
inline double digamma(double x) {
    if (!(x > 0.0)) throw domain_error("digamma: requires x > 0");
    double result = 0.0;
    while (x < 8.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    // 1/(12x^2) - 1/(120x^4) + 1/(252x^6) - 1/(240x^8) + 1/(132x^10) - 691/(32760x^12) + 1/(12x^14)
    double tail = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12))))));
    return result + std::log(x) - 0.5 * inv - tail;
}

// H_n = sum_{k=1..n} 1/k; direct summation (small terms first) up to 1e6,
// psi(n+1) + gamma beyond.
inline double harmonic(long n) {
    if (n < 0) throw domain_error("harmonic: requires n >= 0");
    if (n <= 1000000) {
        double s = 0.0;
        for (long k = n; k >= 1; --k) s += 1.0 / static_cast<double>(k);
        return s;
    }
    return digamma(static_cast<double>(n) + 1.0) + euler_gamma;
}

// n! for 0 <= n <= 170; +inf beyond (callers needing larger orders go
// through lgamma instead).
inline double factorial(long n) {
    if (n < 0) throw domain_error("factorial: requires n >= 0");
    if (n > 170) return std::numeric_limits<double>::infinity();
    double f = 1.0;
    for (long k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

} // namespace tb::specfun
