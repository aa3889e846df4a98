#pragma once

#include <tb/errors.hpp>
#include <tb/expr.hpp>
#include <tb/interval.hpp>
#include <tb/signal.hpp>

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

namespace tb {

struct quad_result {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct quad_options {
    double tol = 1e-10;
    long budget = 1L << 20; // max integrand evaluations
};

namespace detail {

inline constexpr double half_pi = 1.5707963267948966;

// A new-node term this small relative to the largest term seen is treated as
// converged tail; three in a row end the scan on that side.
inline constexpr double stop_ratio = 2.5e-17;
inline constexpr int stop_runs = 3;

struct node_point {
    double x = 0.0;
    double w = 0.0;
    bool valid = false;
};

// Double-exponential variable transforms. kind 0: tanh-sinh on a finite
// interval; 1: sinh-sinh on the whole line; 2: exp-sinh on [a, +inf);
// 3: exp-sinh mirrored onto (-inf, b]. Nodes that leave the representable
// open interval (or whose transformed weight overflows) come back invalid,
// which ends the scan on that side: endpoints are never touched.
struct de_map {
    int kind = 0;
    double c = 0.0; // kind 0: center; kinds 2/3: the finite endpoint
    double s = 1.0; // kind 0: half-width
    double lo = 0.0;
    double hi = 0.0;

    node_point at(double u) const {
        double z = half_pi * std::sinh(u);
        switch (kind) {
        case 0: {
            // Form the node as an offset from the near endpoint:
            // 1 - |tanh z| = 2q/(1+q) with q = exp(-2|z|). Direct
            // c + s*tanh(z) would round onto the endpoint once the gap
            // drops below the endpoint's ulp, truncating integrable
            // endpoint singularities; the offset form keeps full relative
            // resolution (down to subnormals when the endpoint is 0).
            double q = std::exp(-2.0 * std::fabs(z));
            double offset = s * 2.0 * q / (1.0 + q);
            double x = z >= 0.0 ? hi - offset : lo + offset;
            if (!(x > lo && x < hi)) return {};
            double w = s * half_pi * std::cosh(u) * 4.0 * q / ((1.0 + q) * (1.0 + q));
            if (!std::isfinite(w)) return {};
            return {x, w, true};
        }
        case 1: {
            if (std::fabs(z) > 709.0) return {};
            double x = std::sinh(z);
            double w = half_pi * std::cosh(u) * std::cosh(z);
            if (!std::isfinite(w)) return {};
            return {x, w, true};
        }
        case 2: {
            if (std::fabs(z) > 709.0) return {};
            double e = std::exp(z);
            double x = c + e;
            if (!(x > c) || !std::isfinite(x)) return {};
            double w = half_pi * std::cosh(u) * e;
            if (!std::isfinite(w)) return {};
            return {x, w, true};
        }
        default: {
            if (std::fabs(z) > 709.0) return {};
            double e = std::exp(z);
            double x = c - e;
            if (!(x < c) || !std::isfinite(x)) return {};
            double w = half_pi * std::cosh(u) * e;
            if (!std::isfinite(w)) return {};
            return {x, w, true};
        }
        }
    }
};

// Trapezoid refinement over the transformed axis: level L uses step h0/2^L
// and reuses all coarser nodes, so I_L = h_L * (running node sum). Each
// level's new nodes are scanned outward from the center until their terms
// are negligible against the largest term encountered so far, but never
// before passing the largest |u| an earlier level found significant. A
// non-finite sample right after negligible territory is an overflow
// artifact of the unbounded transform (e.g. huge-power integrands far past
// their mass) and ends the scan; anywhere else it is an error.
template <class F>
quad_result de_integrate(F&& f, const de_map& map, const quad_options& opt) {
    if (!(opt.tol > 0.0)) throw std::invalid_argument("integrate: tol must be > 0");
    const bool symmetric = map.kind <= 1;
    const double h0 = map.kind == 0 ? 0.25 : 0.0625;

    long evals = 0;
    double peak = 0.0;
    // Largest |u| where any level has found a significant term. Refined
    // levels start near u = 0, where an off-center integrand (t^n * decay,
    // mass away from the origin) is negligible against the global peak; the
    // negligibility break must not fire until the scan has passed this
    // point, or those levels would stop before reaching the mass.
    double reach = 0.0;

    auto sample = [&](double u, int consec) -> std::optional<double> {
        node_point p = map.at(u);
        if (!p.valid) return std::nullopt;
        double fx = f(p.x);
        ++evals;
        double term = p.w * fx;
        if (!std::isfinite(term)) {
            if (consec >= 1) return std::nullopt;
            throw quadrature_error("non-finite integrand sample");
        }
        return term;
    };

    double node_sum = 0.0;
    double previous = 0.0;
    double h = h0;
    for (int level = 0;; ++level) {
        if (level > 0) h *= 0.5;
        const long step = level == 0 ? 1 : 2;
        double fresh = 0.0;

        if (symmetric) {
            bool plus_done = false;
            bool minus_done = false;
            int consec = 0;
            for (long k = level == 0 ? 0 : 1;; k += step) {
                double u = h * static_cast<double>(k);
                double term = 0.0;
                bool contributed = false;
                if (!plus_done) {
                    if (auto v = sample(u, consec)) { term += *v; contributed = true; }
                    else plus_done = true;
                }
                if (k > 0 && !minus_done) {
                    if (auto v = sample(-u, consec)) { term += *v; contributed = true; }
                    else minus_done = true;
                }
                if (contributed) {
                    fresh += term;
                    double mag = std::fabs(term);
                    bool negligible = peak > 0.0 && mag <= stop_ratio * peak;
                    if (negligible && u >= reach) {
                        if (++consec >= stop_runs) break;
                    } else {
                        consec = 0;
                        if (!negligible && u > reach) reach = u;
                    }
                    if (mag > peak) peak = mag;
                }
                if (plus_done && minus_done) break;
                if (evals > opt.budget) throw quadrature_error("node budget exhausted before convergence");
            }
        } else {
            for (int dir = 0; dir < 2; ++dir) {
                int consec = 0;
                for (long k = (dir == 0 && level == 0) ? 0 : 1;; k += step) {
                    double u = h * static_cast<double>(k) * (dir == 0 ? 1.0 : -1.0);
                    auto v = sample(u, consec);
                    if (!v) break;
                    fresh += *v;
                    double mag = std::fabs(*v);
                    double au = std::fabs(u);
                    bool negligible = peak > 0.0 && mag <= stop_ratio * peak;
                    if (negligible && au >= reach) {
                        if (++consec >= stop_runs) break;
                    } else {
                        consec = 0;
                        if (!negligible && au > reach) reach = au;
                    }
                    if (mag > peak) peak = mag;
                    if (evals > opt.budget) throw quadrature_error("node budget exhausted before convergence");
                }
            }
        }

        node_sum += fresh;
        double estimate = h * node_sum;
        if (level >= 1) {
            double err = std::fabs(estimate - previous);
            if (err <= opt.tol * std::max(1.0, std::fabs(estimate)))
                return {estimate, err, evals};
            if (evals > opt.budget)
                throw quadrature_error("node budget exhausted before convergence");
        }
        previous = estimate;
    }
}

} // namespace detail

// Integrate f over iv: tanh-sinh nodes on finite intervals (robust to
// endpoint log singularities), exp-sinh on semi-infinite ones, sinh-sinh on
// the whole line. Step halving continues until successive levels agree to
// tol (relative once |value| > 1) or the node budget runs out.
template <class F>
quad_result integrate(F&& f, interval iv, const quad_options& opt = {}) {
    detail::de_map map;
    const bool lo_finite = std::isfinite(iv.lo);
    const bool hi_finite = std::isfinite(iv.hi);
    if (lo_finite && hi_finite) {
        map.kind = 0;
        map.c = 0.5 * (iv.lo + iv.hi);
        map.s = 0.5 * (iv.hi - iv.lo);
        map.lo = iv.lo;
        map.hi = iv.hi;
    } else if (!lo_finite && !hi_finite) {
        map.kind = 1;
    } else if (lo_finite) {
        map.kind = 2;
        map.c = iv.lo;
    } else {
        map.kind = 3;
        map.c = iv.hi;
    }
    return detail::de_integrate(std::forward<F>(f), map, opt);
}

template <class F>
quad_result integrate(F&& f, interval iv, double tol) {
    quad_options opt;
    opt.tol = tol;
    return integrate(std::forward<F>(f), iv, opt);
}

// Un-normalized moment f^(n~)(t0) = integral of f(t) (t-t0)^n over the
// signal's region of convergence. Domain errors at probe nodes surface as
// non-finite samples and follow the scan policy above.
inline double moment(const signal& s, long n, double t0, const quad_options& opt = {}) {
    if (n < 0) throw std::invalid_argument("moment: requires n >= 0");
    if (!std::isfinite(t0)) throw std::invalid_argument("moment: t0 must be finite");
    auto integrand = [&](double t) -> double {
        double ft;
        try {
            ft = eval(s.expr, t);
        } catch (const domain_error&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        // A sample that underflowed to zero contributes nothing even when
        // (t-t0)^n overflows at the same node; skip the multiply so the
        // far tail cannot manufacture 0*inf.
        if (ft == 0.0) return 0.0;
        return ft * int_pow_value(t - t0, n);
    };
    return integrate(integrand, s.rc, opt).value;
}

} // namespace tb
