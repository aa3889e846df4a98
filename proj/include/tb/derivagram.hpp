#pragma once

#include <tb/biorth.hpp>
#include <tb/errors.hpp>
#include <tb/jet.hpp>
#include <tb/quad.hpp>
#include <tb/signal.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tb {

// Energy densities DE(n, t0) = f^(n)(t0) f^(n~)(t0)/n! laid out with
// derivative level n as rows and base points t0 as columns.
struct derivagram {
    std::string name;
    long levels = 0;
    std::vector<double> grid;
    std::vector<std::vector<double>> values; // values[n][i]
};

enum class svg_mode { graymap, bargraph };

namespace dgram {

inline derivagram compute(const signal& s, const std::vector<double>& grid, long levels,
                          const quad_options& opt = {}) {
    if (levels < 1) throw std::invalid_argument("derivagram: levels must be >= 1");
    for (double t0 : grid)
        if (!s.rc.contains(t0)) throw domain_error("grid point outside region of convergence");

    derivagram d;
    d.name = s.name;
    d.levels = levels;
    d.grid = grid;
    d.values.assign(static_cast<std::size_t>(levels), std::vector<double>(grid.size(), 0.0));

    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto order = static_cast<std::size_t>(levels - 1);
        jet j = lift(s.expr, grid[i], order, std::max(order, default_order_limit));
        for (long n = 0; n < levels; ++n)
            d.values[static_cast<std::size_t>(n)][i] =
                derivative(j, n) * dual_coefficient(s, n, grid[i], opt);
    }
    return d;
}

namespace detail {

inline std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string gray_fill(double v, double lo, double hi) {
    long g = lo == hi ? 512 : std::lround((v - lo) / (hi - lo) * 1023.0);
    g = std::clamp(g, 0L, 1023L);
    long byte = std::lround(static_cast<double>(g) * 255.0 / 1023.0);
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(byte),
                  static_cast<int>(byte), static_cast<int>(byte));
    return buf;
}

} // namespace detail

inline void render_csv(const derivagram& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "n,t0,DE\n";
    for (long n = 0; n < d.levels; ++n)
        for (std::size_t i = 0; i < d.grid.size(); ++i)
            out << n << ',' << detail::format_value(d.grid[i]) << ','
                << detail::format_value(d.values[static_cast<std::size_t>(n)][i]) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline derivagram read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "n,t0,DE")
        throw std::runtime_error("bad derivagram CSV header: " + path);

    derivagram d;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');
        long n = std::strtol(field.c_str(), nullptr, 10);
        std::getline(row, field, ',');
        double t0 = std::strtod(field.c_str(), nullptr);
        std::getline(row, field, ',');
        double v = std::strtod(field.c_str(), nullptr);

        if (n == 0) d.grid.push_back(t0);
        if (n >= static_cast<long>(d.values.size()))
            d.values.resize(static_cast<std::size_t>(n) + 1);
        d.values[static_cast<std::size_t>(n)].push_back(v);
    }
    d.levels = static_cast<long>(d.values.size());
    return d;
}

inline void render_svg(const derivagram& d, const std::string& path, svg_mode mode,
                       std::size_t column = 0) {
    if (d.levels < 1 || d.grid.empty()) throw std::invalid_argument("render_svg: empty matrix");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

    if (mode == svg_mode::graymap) {
        const int cell = 24;
        double lo = d.values[0][0], hi = d.values[0][0];
        for (const auto& row : d.values)
            for (double v : row) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        long w = static_cast<long>(d.grid.size()) * cell;
        long h = d.levels * cell;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
            << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
        for (long n = 0; n < d.levels; ++n)
            for (std::size_t i = 0; i < d.grid.size(); ++i)
                out << "  <rect x=\"" << i * cell << "\" y=\"" << n * cell << "\" width=\"" << cell
                    << "\" height=\"" << cell << "\" fill=\""
                    << detail::gray_fill(d.values[static_cast<std::size_t>(n)][i], lo, hi)
                    << "\"/>\n";
        out << "</svg>\n";
    } else {
        if (column >= d.grid.size()) throw std::invalid_argument("render_svg: column out of range");
        const int bar = 20, gap = 4, half = 120;
        double peak = 0.0;
        for (long n = 0; n < d.levels; ++n)
            peak = std::max(peak, std::fabs(d.values[static_cast<std::size_t>(n)][column]));
        double scale = peak > 0.0 ? (half - 10) / peak : 0.0;
        long w = d.levels * (bar + gap) + gap;
        long h = 2 * half;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
            << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
        out << "  <line x1=\"0\" y1=\"" << half << "\" x2=\"" << w << "\" y2=\"" << half
            << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
        for (long n = 0; n < d.levels; ++n) {
            double v = d.values[static_cast<std::size_t>(n)][column];
            double px = std::fabs(v) * scale;
            double y = v >= 0.0 ? half - px : half;
            out << "  <rect x=\"" << gap + n * (bar + gap) << "\" y=\"" << detail::format_value(y)
                << "\" width=\"" << bar << "\" height=\"" << detail::format_value(px)
                << "\" fill=\"" << (v >= 0.0 ? "#404040" : "#a0a0a0") << "\"/>\n";
        }
        out << "</svg>\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace dgram

} // namespace tb
