#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tb {

// An open interval (lo, hi); either endpoint may be infinite. Used both as an
// integration range and as a signal's region of convergence.
struct interval {
    double lo;
    double hi;

    interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi)) throw std::invalid_argument("interval: requires lo < hi");
    }

    bool finite() const { return std::isfinite(lo) && std::isfinite(hi); }

    // Strict interior membership.
    bool contains(double t) const { return t > lo && t < hi; }

    // Membership including finite endpoints.
    bool contains_closure(double t) const { return t >= lo && t <= hi; }

    // Symmetric about the origin (covers (-a, a) and the whole line).
    bool symmetric() const { return lo == -hi; }

    static interval real_line() {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }
};

} // namespace tb
