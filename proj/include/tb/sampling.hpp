#pragma once

#include <tb/interval.hpp>
#include <tb/quad.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace tb {

inline constexpr double pi = 3.141592653589793;

// Sa(x) = sin(x)/x, with the series branch taking over near 0 where the
// quotient loses digits.
inline double sa(double x) {
    if (std::fabs(x) < 1e-4) {
        double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// A bandlimited signal reduced to its samples f(m/2B), m = -M..M: the
// Dirac-comb side of the sampling biorthogonality. Kept as an index map,
// never as spikes on a grid.
struct sampled_signal {
    double bandwidth = 1.0;
    long truncation = 0;
    std::map<long, double> samples;
};

template <class F>
sampled_signal make_sampled(F&& f, double bandwidth, long truncation) {
    if (!(bandwidth > 0.0)) throw std::invalid_argument("make_sampled: bandwidth must be > 0");
    if (truncation < 0) throw std::invalid_argument("make_sampled: truncation must be >= 0");
    sampled_signal ss;
    ss.bandwidth = bandwidth;
    ss.truncation = truncation;
    for (long m = -truncation; m <= truncation; ++m)
        ss.samples[m] = f(static_cast<double>(m) / (2.0 * bandwidth));
    return ss;
}

// <Sa(2πBt - nπ), δ(t - m/2B)> = Sa(π(m-n)). The pairing always lands on an
// integer multiple of π, where sin vanishes identically, so the value is the
// Kronecker delta itself; B cancels before it can enter.
inline double sinc_biorth(long n, long m, double bandwidth) {
    if (!(bandwidth > 0.0)) throw std::invalid_argument("sinc_biorth: bandwidth must be > 0");
    return n == m ? 1.0 : 0.0;
}

// Reconstruction formula i): f(t) ~ sum_{m=-M..M} f(m/2B) Sa(2πBt - mπ).
inline double shannon_reconstruct(const sampled_signal& ss, double t) {
    double acc = 0.0;
    for (const auto& [m, v] : ss.samples)
        acc += v * sa(2.0 * pi * ss.bandwidth * t - static_cast<double>(m) * pi);
    return acc;
}

// Reconstruction formula ii)'s comb coefficients, recovered through the
// biorthogonal pairing: applying the sample train to the n-th sinc analysis
// function collapses to the stored sample at n.
inline double sample_train_apply(const sampled_signal& ss, long n) {
    double acc = 0.0;
    for (const auto& [m, v] : ss.samples) acc += v * sinc_biorth(n, m, ss.bandwidth);
    return acc;
}

// The same coefficients by quadrature, c_n = ∫ f·Sa(2πBt - nπ) dt, over the
// finite window [-W, W] with W = (M+8)/(2B); the sinc tail only decays like
// 1/t, so the window must comfortably cover the retained indices.
template <class F>
double dual_sample_coefficient(F&& f, long n, double bandwidth, long truncation,
                               const quad_options& opt = {}) {
    if (!(bandwidth > 0.0))
        throw std::invalid_argument("dual_sample_coefficient: bandwidth must be > 0");
    double w = (static_cast<double>(truncation) + 8.0) / (2.0 * bandwidth);
    auto integrand = [&](double t) {
        return f(t) * sa(2.0 * pi * bandwidth * t - static_cast<double>(n) * pi);
    };
    return integrate(integrand, interval(-w, w), opt).value;
}

} // namespace tb
