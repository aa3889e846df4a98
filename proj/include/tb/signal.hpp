#pragma once

#include <tb/expr.hpp>
#include <tb/interval.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tb {

// The analyzable object: a closed-form expression together with its region
// of convergence (which is also the integration region for moments and
// energies).
struct signal {
    std::string name;
    expression expr;
    interval rc;
};

inline signal make_signal(std::string name, std::string_view text, interval rc) {
    return signal{std::move(name), parse(text), rc};
}

inline signal with_rc(signal s, interval rc) {
    s.rc = rc;
    return s;
}

inline bool is_builtin(std::string_view name) {
    return name == "gaussian" || name == "logpulse";
}

// Built-in registry: "gaussian" is exp(-t^2/2) on the whole line, "logpulse"
// is ln(1-t) with default region (0,1); pass a different rc through with_rc
// (the (-1,1) variant is the usual alternative).
inline const signal& builtin(std::string_view name) {
    static const signal gaussian = make_signal("gaussian", "exp(-t^2/2)", interval::real_line());
    static const signal logpulse = make_signal("logpulse", "ln(1-t)", interval(0.0, 1.0));
    if (name == "gaussian") return gaussian;
    if (name == "logpulse") return logpulse;
    throw std::invalid_argument("unknown built-in signal '" + std::string(name) + "'");
}

} // namespace tb
