// tb: command-line front end for the Taylor-biorthogonal library.
//
//   tb analyze    --signal <name|expr> [--rc lo,hi] --b <t0> --levels <N> [--format csv|json]
//   tb series     --name <converg1|converg2|harmonic|alternating> [--terms N] [--accelerate D]
//   tb derivagram --signal <name|expr> [--rc lo,hi] --grid lo:hi:steps --levels <N> --out <csv> [--svg <svg>]
//   tb sampling   --bandwidth <B> [--truncation M] [--t t]
//
// Exit codes: 0 success, 2 usage/validation error, 3 numeric failure.
// TB_TOL overrides the default quadrature tolerance; --tol beats both.

#include <CLI11.hpp>
#include <json.hpp>
#include <tb/tb.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string& text, const char* what) {
    if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty())
        throw std::invalid_argument(std::string(what) + ": cannot parse number '" + text + "'");
    return v;
}

tb::interval parse_rc(const std::string& spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--rc expects 'lo,hi' (use inf/-inf for infinite endpoints)");
    double lo = parse_number(spec.substr(0, comma), "--rc");
    double hi = parse_number(spec.substr(comma + 1), "--rc");
    return tb::interval(lo, hi);
}

std::vector<double> parse_grid(const std::string& spec) {
    auto c1 = spec.find(':');
    auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw std::invalid_argument("--grid expects 'lo:hi:steps'");
    double lo = parse_number(spec.substr(0, c1), "--grid");
    double hi = parse_number(spec.substr(c1 + 1, c2 - c1 - 1), "--grid");
    long steps = std::lround(parse_number(spec.substr(c2 + 1), "--grid"));
    if (steps < 1) throw std::invalid_argument("--grid: steps must be >= 1");
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        g.push_back(lo);
    } else {
        for (long i = 0; i < steps; ++i)
            g.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    return g;
}

tb::signal resolve_signal(const std::string& selector, const std::string& rc_spec) {
    if (tb::is_builtin(selector)) {
        tb::signal s = tb::builtin(selector);
        if (!rc_spec.empty()) s = tb::with_rc(std::move(s), parse_rc(rc_spec));
        return s;
    }
    if (rc_spec.empty())
        throw std::invalid_argument("inline signal expressions require --rc lo,hi");
    return tb::make_signal(selector, selector, parse_rc(rc_spec));
}

struct analyze_cfg {
    std::string signal, rc, format = "csv";
    double b = 0.0;
    long levels = 10;
};

int run_analyze(const analyze_cfg& cfg, const tb::quad_options& opt) {
    if (cfg.levels < 1) throw std::invalid_argument("--levels must be >= 1");
    if (cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("--format must be csv or json");
    tb::signal s = resolve_signal(cfg.signal, cfg.rc);
    if (!s.rc.contains_closure(cfg.b)) {
        std::cerr << "base point outside region of convergence\n";
        return 2;
    }
    tb::energy_decomposition ed = tb::parseval_taylor(s, cfg.b, cfg.levels - 1, opt);
    double gap = std::fabs(ed.cumulative.back() - ed.quadrature_energy);

    if (cfg.format == "json") {
        nlohmann::json j;
        j["signal"] = ed.name;
        j["b"] = ed.b;
        j["levels"] = cfg.levels;
        j["rows"] = nlohmann::json::array();
        for (long n = 0; n < cfg.levels; ++n) {
            auto i = static_cast<std::size_t>(n);
            j["rows"].push_back({{"n", n},
                                 {"c", ed.c[i]},
                                 {"c_dual", ed.c_dual[i]},
                                 {"de", ed.de[i]},
                                 {"cumulative", ed.cumulative[i]}});
        }
        j["quadrature_energy"] = ed.quadrature_energy;
        j["gap"] = gap;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "n,c,c_dual,de,cumulative\n";
        for (long n = 0; n < cfg.levels; ++n) {
            auto i = static_cast<std::size_t>(n);
            std::cout << n << ',' << fmt(ed.c[i]) << ',' << fmt(ed.c_dual[i]) << ','
                      << fmt(ed.de[i]) << ',' << fmt(ed.cumulative[i]) << '\n';
        }
        std::cout << "# quadrature_energy=" << fmt(ed.quadrature_energy) << " gap=" << fmt(gap)
                  << '\n';
    }
    return 0;
}

struct series_cfg {
    std::string name;
    long terms = 100;
    long depth = 5;
    bool depth_given = false;
};

int run_series(const series_cfg& cfg) {
    if (cfg.terms < 1) throw std::invalid_argument("--terms must be >= 1");
    tb::series_report r;
    double target;
    long first_index = 1;
    if (cfg.name == "converg1") {
        r = tb::converg1(cfg.terms - 1);
        target = 1.2533141373155003; // sqrt(pi/2)
        first_index = 0;
    } else if (cfg.name == "converg2") {
        target = 1.4227843350984671; // 2 - C
        r = tb::converg2(cfg.terms);
    } else if (cfg.name == "harmonic") {
        target = 2.0;
        r = tb::harmonic_identity_series(cfg.terms);
    } else if (cfg.name == "alternating") {
        target = 0.18831730559662161; // 2(ln^2 2 - 2 ln 2 + 1)
        r = tb::alternating_log_series(cfg.terms);
    } else {
        throw std::invalid_argument("unknown series name '" + cfg.name +
                                    "' (expected converg1, converg2, harmonic or alternating)");
    }

    long depth = cfg.depth;
    if (!cfg.depth_given) depth = std::min(depth, (r.terms_used - 1) / 2);
    double accelerated = depth >= 1 ? tb::aitken_accelerate(r.partial_sums, depth) : r.raw_estimate;

    std::cout << "N,partial_sum\n";
    for (long i = 0; i < r.terms_used; ++i)
        std::cout << first_index + i << ',' << fmt(r.partial_sums[static_cast<std::size_t>(i)])
                  << '\n';
    std::cout << "# accelerated=" << fmt(accelerated) << " target=" << fmt(target) << '\n';
    return 0;
}

struct derivagram_cfg {
    std::string signal, rc, grid = "0:0:1", out, svg, mode = "graymap";
    long levels = 10;
    long column = 0;
};

int run_derivagram(const derivagram_cfg& cfg, const tb::quad_options& opt) {
    tb::signal s = resolve_signal(cfg.signal, cfg.rc);
    std::vector<double> grid = parse_grid(cfg.grid);
    tb::derivagram d = tb::dgram::compute(s, grid, cfg.levels, opt);
    tb::dgram::render_csv(d, cfg.out);
    if (!cfg.svg.empty()) {
        if (cfg.mode == "graymap") {
            tb::dgram::render_svg(d, cfg.svg, tb::svg_mode::graymap);
        } else if (cfg.mode == "bargraph") {
            tb::dgram::render_svg(d, cfg.svg, tb::svg_mode::bargraph,
                                  static_cast<std::size_t>(cfg.column));
        } else {
            throw std::invalid_argument("--mode must be graymap or bargraph");
        }
    }
    return 0;
}

struct sampling_cfg {
    double bandwidth = 1.0;
    long truncation = 16;
    double t = 0.3;
};

int run_sampling(const sampling_cfg& cfg) {
    if (!(cfg.bandwidth > 0.0)) throw std::invalid_argument("--bandwidth must be > 0");
    if (cfg.truncation < 0) throw std::invalid_argument("--truncation must be >= 0");
    const double bw = cfg.bandwidth;

    std::cout << "biorthogonality <Sa_n, delta_m> for |n|,|m| <= 5 (B=" << fmt(bw) << "):\n";
    for (long n = -5; n <= 5; ++n) {
        for (long m = -5; m <= 5; ++m)
            std::cout << (m > -5 ? " " : "") << tb::sinc_biorth(n, m, bw);
        std::cout << '\n';
    }

    auto f = [bw](double t) {
        return tb::sa(2.0 * tb::pi * bw * t) + 0.5 * tb::sa(2.0 * tb::pi * bw * t - 3.0 * tb::pi);
    };
    double direct = f(cfg.t);
    std::cout << "\nsignal: sa(2*pi*B*t) + 0.5*sa(2*pi*B*t - 3*pi), t=" << fmt(cfg.t) << '\n';
    std::cout << "direct=" << fmt(direct) << '\n';

    std::cout << "M,abs_error\n";
    std::vector<long> ladder;
    for (long m = 0; m < cfg.truncation; m = m == 0 ? 1 : 2 * m) ladder.push_back(m);
    ladder.push_back(cfg.truncation);
    double reconstruction = direct;
    for (long m : ladder) {
        tb::sampled_signal ss = tb::make_sampled(f, bw, m);
        reconstruction = tb::shannon_reconstruct(ss, cfg.t);
        std::cout << m << ',' << fmt(std::fabs(reconstruction - direct)) << '\n';
    }
    std::cout << "reconstruction=" << fmt(reconstruction) << " (M=" << cfg.truncation << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Taylor-series biorthogonal analysis"};
    app.require_subcommand(1);

    double tol = -1.0; // sentinel: not set
    app.add_option("--tol", tol, "quadrature tolerance (default 1e-10, or TB_TOL)");

    analyze_cfg ac;
    auto* analyze = app.add_subcommand("analyze", "Parseval-Taylor energy decomposition");
    analyze->add_option("--signal", ac.signal, "built-in name or inline expression")->required();
    analyze->add_option("--rc", ac.rc, "region of convergence lo,hi");
    analyze->add_option("--b", ac.b, "base point");
    analyze->add_option("--levels", ac.levels, "number of levels (rows n=0..N-1)");
    analyze->add_option("--format", ac.format, "csv or json");

    series_cfg sc;
    auto* series = app.add_subcommand("series", "numerical series with acceleration");
    series->add_option("--name", sc.name, "converg1 | converg2 | harmonic | alternating")
        ->required();
    series->add_option("--terms", sc.terms, "number of terms");
    auto* depth_opt = series->add_option("--accelerate", sc.depth, "Aitken depth");

    derivagram_cfg dc;
    auto* derivagram = app.add_subcommand("derivagram", "energy density over level and base point");
    derivagram->add_option("--signal", dc.signal, "built-in name or inline expression")->required();
    derivagram->add_option("--rc", dc.rc, "region of convergence lo,hi");
    derivagram->add_option("--grid", dc.grid, "base points lo:hi:steps");
    derivagram->add_option("--levels", dc.levels, "derivative levels (rows)");
    derivagram->add_option("--out", dc.out, "CSV output path")->required();
    derivagram->add_option("--svg", dc.svg, "SVG output path");
    derivagram->add_option("--mode", dc.mode, "graymap or bargraph");
    derivagram->add_option("--column", dc.column, "bargraph column index");

    sampling_cfg pc;
    auto* sampling = app.add_subcommand("sampling", "Shannon sampling biorthogonality");
    sampling->add_option("--bandwidth", pc.bandwidth, "bandwidth B > 0")->required();
    sampling->add_option("--truncation", pc.truncation, "sample indices -M..M");
    sampling->add_option("--t", pc.t, "reconstruction point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    sc.depth_given = depth_opt->count() > 0;

    try {
        tb::quad_options opt;
        if (tol >= 0.0) {
            if (!(tol > 0.0)) throw std::invalid_argument("--tol must be > 0");
            opt.tol = tol;
        } else if (const char* env = std::getenv("TB_TOL")) {
            char* end = nullptr;
            double v = std::strtod(env, &end);
            if (*env == '\0' || end == env || *end != '\0' || !(v > 0.0))
                throw std::invalid_argument(std::string("invalid TB_TOL value '") + env + "'");
            opt.tol = v;
        }

        if (*analyze) return run_analyze(ac, opt);
        if (*series) return run_series(sc);
        if (*derivagram) return run_derivagram(dc, opt);
        if (*sampling) return run_sampling(pc);
        return 2;
    } catch (const tb::quadrature_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const tb::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const tb::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
