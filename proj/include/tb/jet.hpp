#pragma once

#include <tb/distribution.hpp>
#include <tb/errors.hpp>
#include <tb/expr.hpp>
#include <tb/specfun.hpp>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tb {

// Truncated Taylor expansion ("jet") of order N at a base point b, stored as
// normalized coefficients coeffs[k] = f^(k)(b)/k!. Normalization keeps the
// representation finite far beyond the k ~ 170 factorial overflow point and
// makes polynomial evaluation a plain Horner pass.
class jet {
public:
    jet(double base, std::size_t order) : base_(base), c_(order + 1, 0.0) {}

    static jet constant(double v, double base, std::size_t order) {
        jet j(base, order);
        j.c_[0] = v;
        return j;
    }

    static jet variable(double base, std::size_t order) {
        jet j(base, order);
        j.c_[0] = base;
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    double base() const { return base_; }
    std::size_t order() const { return c_.size() - 1; }

    double operator[](std::size_t k) const { return c_[k]; }
    double& operator[](std::size_t k) { return c_[k]; }

    const std::vector<double>& coeffs() const { return c_; }

private:
    double base_;
    std::vector<double> c_;
};

namespace jet_ops {

inline jet add(const jet& f, const jet& g) {
    jet h(f.base(), f.order());
    for (std::size_t k = 0; k <= f.order(); ++k) h[k] = f[k] + g[k];
    return h;
}

inline jet sub(const jet& f, const jet& g) {
    jet h(f.base(), f.order());
    for (std::size_t k = 0; k <= f.order(); ++k) h[k] = f[k] - g[k];
    return h;
}

inline jet neg(const jet& f) {
    jet h(f.base(), f.order());
    for (std::size_t k = 0; k <= f.order(); ++k) h[k] = -f[k];
    return h;
}

// Cauchy product.
inline jet mul(const jet& f, const jet& g) {
    jet h(f.base(), f.order());
    for (std::size_t k = 0; k <= f.order(); ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j <= k; ++j) s += f[j] * g[k - j];
        h[k] = s;
    }
    return h;
}

// Forward substitution; the constant term of the divisor must stay clear of
// zero (poles fail loudly rather than producing inf coefficients).
inline jet div(const jet& f, const jet& g) {
    if (std::fabs(g[0]) < 1e-300) throw domain_error("jet division by (near-)zero constant term");
    jet h(f.base(), f.order());
    for (std::size_t k = 0; k <= f.order(); ++k) {
        double s = f[k];
        for (std::size_t j = 0; j < k; ++j) s -= h[j] * g[k - j];
        h[k] = s / g[0];
    }
    return h;
}

// g = exp(f): (k+1) g_{k+1} = sum_{j=0..k} (j+1) f_{j+1} g_{k-j}.
inline jet exp(const jet& f) {
    jet g(f.base(), f.order());
    g[0] = std::exp(f[0]);
    for (std::size_t k = 0; k + 1 <= f.order(); ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j <= k; ++j) s += static_cast<double>(j + 1) * f[j + 1] * g[k - j];
        g[k + 1] = s / static_cast<double>(k + 1);
    }
    return g;
}

// g = ln(f): from f g' = f',
// g_{k+1} = ((k+1) f_{k+1} - sum_{j=1..k} f_j (k-j+1) g_{k-j+1}) / ((k+1) f_0).
inline jet ln(const jet& f) {
    if (!(f[0] > 0.0)) throw domain_error("ln of non-positive argument");
    jet g(f.base(), f.order());
    g[0] = std::log(f[0]);
    for (std::size_t k = 0; k + 1 <= f.order(); ++k) {
        double s = static_cast<double>(k + 1) * f[k + 1];
        for (std::size_t j = 1; j <= k; ++j)
            s -= f[j] * static_cast<double>(k - j + 1) * g[k - j + 1];
        g[k + 1] = s / (static_cast<double>(k + 1) * f[0]);
    }
    return g;
}

// Joint recurrence for s = sin(f), c = cos(f).
inline std::pair<jet, jet> sin_cos(const jet& f) {
    jet s(f.base(), f.order());
    jet c(f.base(), f.order());
    s[0] = std::sin(f[0]);
    c[0] = std::cos(f[0]);
    for (std::size_t k = 0; k + 1 <= f.order(); ++k) {
        double as = 0.0;
        double ac = 0.0;
        for (std::size_t j = 0; j <= k; ++j) {
            double fj = static_cast<double>(j + 1) * f[j + 1];
            as += fj * c[k - j];
            ac -= fj * s[k - j];
        }
        s[k + 1] = as / static_cast<double>(k + 1);
        c[k + 1] = ac / static_cast<double>(k + 1);
    }
    return {std::move(s), std::move(c)};
}

inline jet sqrt(const jet& f) {
    if (!(f[0] > 0.0)) throw domain_error("sqrt of non-positive argument");
    jet g(f.base(), f.order());
    g[0] = std::sqrt(f[0]);
    for (std::size_t k = 1; k <= f.order(); ++k) {
        double s = f[k];
        for (std::size_t j = 1; j < k; ++j) s -= g[j] * g[k - j];
        g[k] = s / (2.0 * g[0]);
    }
    return g;
}

inline jet pow(const jet& f, long n) {
    if (n < 0) return div(jet::constant(1.0, f.base(), f.order()), pow(f, -n));
    jet r = jet::constant(1.0, f.base(), f.order());
    jet p = f;
    for (long k = n; k > 0; k >>= 1) {
        if (k & 1) r = mul(r, p);
        if (k > 1) p = mul(p, p);
    }
    return r;
}

} // namespace jet_ops

inline constexpr std::size_t default_order_limit = 64;

namespace detail {

inline jet lift_node(const expr_node& n, double b, std::size_t order) {
    switch (n.kind) {
    case node_kind::constant: return jet::constant(n.value, b, order);
    case node_kind::variable: return jet::variable(b, order);
    case node_kind::add: return jet_ops::add(lift_node(*n.a, b, order), lift_node(*n.b, b, order));
    case node_kind::sub: return jet_ops::sub(lift_node(*n.a, b, order), lift_node(*n.b, b, order));
    case node_kind::neg: return jet_ops::neg(lift_node(*n.a, b, order));
    case node_kind::mul: return jet_ops::mul(lift_node(*n.a, b, order), lift_node(*n.b, b, order));
    case node_kind::div: return jet_ops::div(lift_node(*n.a, b, order), lift_node(*n.b, b, order));
    case node_kind::int_pow: return jet_ops::pow(lift_node(*n.a, b, order), n.exponent);
    case node_kind::exp: return jet_ops::exp(lift_node(*n.a, b, order));
    case node_kind::ln: return jet_ops::ln(lift_node(*n.a, b, order));
    case node_kind::sin: return jet_ops::sin_cos(lift_node(*n.a, b, order)).first;
    case node_kind::cos: return jet_ops::sin_cos(lift_node(*n.a, b, order)).second;
    case node_kind::sqrt: return jet_ops::sqrt(lift_node(*n.a, b, order));
    }
    throw std::logic_error("lift: corrupt expression node");
}

} // namespace detail

// Taylor-mode differentiation: coeffs[k] = f^(k)(b)/k! by structural
// recursion over the expression. Orders above `limit` are rejected so an
// accidental huge order fails fast; callers that genuinely need more pass a
// larger limit.
inline jet lift(const expression& e, double b, std::size_t order,
                std::size_t limit = default_order_limit) {
    if (order > limit) throw std::invalid_argument("lift: order exceeds limit");
    return detail::lift_node(e.root(), b, order);
}

// f^(n)(b) = n! * coeffs[n]. Exact factorial up to n = 170, the
// lgamma route beyond (n! itself overflows there while the product can
// still be finite).
inline double derivative(const jet& j, std::size_t n) {
    if (n > j.order()) throw std::out_of_range("derivative: order exceeds jet order");
    double c = j[n];
    if (n <= 170) return specfun::factorial(static_cast<long>(n)) * c;
    if (c == 0.0) return 0.0;
    double m = specfun::lgamma(static_cast<double>(n) + 1.0) + std::log(std::fabs(c));
    return std::copysign(std::exp(m), c);
}

// Horner evaluation of sum_k coeffs[k] (t-b)^k.
inline double truncated_taylor_eval(const jet& j, double t) {
    double dt = t - j.base();
    double acc = 0.0;
    for (std::size_t k = j.order() + 1; k-- > 0;) acc = acc * dt + j[k];
    return acc;
}

// The Taylor kernel as a distributional series at 0: coefficients t^n/n!, so
// its action on g is sum_{n<=N} g^(n)(0) t^n/n!.
inline distributional_series taylor_kernel(std::size_t N, double t) {
    distributional_series ds;
    ds.center = 0.0;
    ds.coeffs.resize(N + 1);
    double d = 1.0;
    ds.coeffs[0] = d;
    for (std::size_t n = 1; n <= N; ++n) {
        d *= t / static_cast<double>(n);
        ds.coeffs[n] = d;
    }
    return ds;
}

} // namespace tb
