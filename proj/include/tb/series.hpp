#pragma once

#include <tb/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tb {

struct series_report {
    long terms_used = 0;
    std::vector<double> partial_sums;
    double raw_estimate = 0.0;
    double accelerated_estimate = 0.0;
    bool monotone = false;
    bool oscillatory = false;
};

// Iterated Aitken delta-squared. Each stage maps s_i to
// s_i - (s_{i+1}-s_i)^2 / (s_{i+2}-2s_{i+1}+s_i) and shrinks the list by
// two. A vanishing (or relatively tiny) denominator means the stage has hit
// numerical noise: iteration stops and the current stage's last entry wins.
inline double aitken_accelerate(const std::vector<double>& partial_sums, long depth) {
    if (depth < 1) throw std::invalid_argument("aitken_accelerate: depth must be >= 1");
    if (static_cast<long>(partial_sums.size()) < 2 * depth + 1)
        throw std::invalid_argument("aitken_accelerate: insufficient terms for requested depth");
    std::vector<double> s = partial_sums;
    for (long d = 0; d < depth; ++d) {
        std::vector<double> next(s.size() - 2);
        for (std::size_t i = 0; i + 2 < s.size(); ++i) {
            double fwd = s[i + 1] - s[i];
            double num = fwd * fwd;
            double den = s[i + 2] - 2.0 * s[i + 1] + s[i];
            if (den == 0.0 || std::fabs(den) < 1e-14 * std::fabs(num)) return s.back();
            next[i] = s[i] - num / den;
        }
        s = std::move(next);
    }
    return s.back();
}

namespace detail {

inline series_report make_report(std::vector<double> sums) {
    series_report r;
    r.terms_used = static_cast<long>(sums.size());
    r.raw_estimate = sums.empty() ? 0.0 : sums.back();

    bool nondec = true, noninc = true;
    bool alternating = sums.size() >= 3;
    double prev_diff = 0.0;
    for (std::size_t i = 1; i < sums.size(); ++i) {
        double d = sums[i] - sums[i - 1];
        if (d > 0.0) noninc = false;
        if (d < 0.0) nondec = false;
        if (i >= 2 && !(prev_diff * d < 0.0)) alternating = false;
        prev_diff = d;
    }
    r.monotone = nondec || noninc;
    r.oscillatory = alternating && !r.monotone;

    long depth = std::min<long>(5, (static_cast<long>(sums.size()) - 1) / 2);
    r.accelerated_estimate = depth >= 1 ? aitken_accelerate(sums, depth) : r.raw_estimate;
    r.partial_sums = std::move(sums);
    return r;
}

} // namespace detail

// convergl(N) = sum_{k=0}^{N} (-1)^k Gamma(k+1/2)/Gamma(k+1), the Gaussian
// cumulative-energy series up to sqrt(2); oscillates around sqrt(pi/2).
inline series_report converg1(long n_max) {
    if (n_max < 0) throw std::invalid_argument("converg1: requires N >= 0");
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(n_max) + 1);
    double acc = 0.0;
    for (long k = 0; k <= n_max; ++k) {
        double mag = std::exp(specfun::lgamma(k + 0.5) - specfun::lgamma(k + 1.0));
        acc += (k % 2 == 0) ? mag : -mag;
        sums.push_back(acc);
    }
    return detail::make_report(std::move(sums));
}

// converg2(N) = sum_{k=1}^{N} psi(k+2)/(k(k+1)), increasing to 2-C. A
// k(k+2) denominator is sometimes quoted for this series; it is
// inconsistent with the parent identity sum H_{n+1}/(n(n+1)) = 2, and
// k(k+1) is the form that derivation forces.
inline series_report converg2(long n_max) {
    if (n_max < 1) throw std::invalid_argument("converg2: requires N >= 1");
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(n_max));
    double acc = 0.0;
    for (long k = 1; k <= n_max; ++k) {
        acc += specfun::digamma(static_cast<double>(k) + 2.0) /
               (static_cast<double>(k) * (static_cast<double>(k) + 1.0));
        sums.push_back(acc);
    }
    return detail::make_report(std::move(sums));
}

// sum_{n=1}^{N} H_{n+1}/(n(n+1)) -> 2.
inline series_report harmonic_identity_series(long n_max) {
    if (n_max < 1) throw std::invalid_argument("harmonic_identity_series: requires N >= 1");
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(n_max));
    double acc = 0.0;
    double h = 1.5; // H_2
    for (long n = 1; n <= n_max; ++n) {
        acc += h / (static_cast<double>(n) * (static_cast<double>(n) + 1.0));
        sums.push_back(acc);
        h += 1.0 / (static_cast<double>(n) + 2.0);
    }
    return detail::make_report(std::move(sums));
}

// sum_{n=1}^{N} (-1)^n H_{n+1}/(n(n+1)), the signed companion of the
// harmonic identity.
inline series_report alternating_log_series(long n_max) {
    if (n_max < 1) throw std::invalid_argument("alternating_log_series: requires N >= 1");
    std::vector<double> sums;
    sums.reserve(static_cast<std::size_t>(n_max));
    double acc = 0.0;
    double h = 1.5;
    for (long n = 1; n <= n_max; ++n) {
        double term = h / (static_cast<double>(n) * (static_cast<double>(n) + 1.0));
        acc += (n % 2 == 0) ? term : -term;
        sums.push_back(acc);
        h += 1.0 / (static_cast<double>(n) + 2.0);
    }
    return detail::make_report(std::move(sums));
}

} // namespace tb
