#pragma once

// CSV and SVG output for traced curve sets. Numbers are printed with a
// fixed format so identical inputs give byte-identical files.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "lame/curves.hpp"
#include "lame/errors.hpp"

namespace lame {

namespace detail {

inline std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x == 0 ? 0.0 : x);  // no "-0"
    return buf;
}

inline std::string sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12e", x == 0 ? 0.0 : x);
    return buf;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write " + path);
    f << text;
    if (!f) throw InvalidArgument("cannot write " + path);
}

}  // namespace detail

/// Display coordinates for the J-plane: J / |J| log(1 + |J|), so arcs running
/// into the cusp stay on the page.
inline std::complex<double> log_radial(const std::complex<double>& J) {
    const double r = std::abs(J);
    return r == 0 ? J : J * (std::log1p(r) / r);
}

/// condition_label,segment_id,point_index,re,im
inline std::string curves_csv(const CurveSet& cs) {
    std::ostringstream out;
    out << "condition_label,segment_id,point_index,re,im\n";
    for (std::size_t s = 0; s < cs.lines.size(); ++s) {
        const auto& l = cs.lines[s];
        for (std::size_t i = 0; i < l.pts.size(); ++i) {
            out << l.label << ',' << s << ',' << i << ',' << detail::sci(l.pts[i].real()) << ','
                << detail::sci(l.pts[i].imag()) << '\n';
        }
    }
    return out.str();
}

/// One path per polyline, titled with its condition label. J-plane sets are
/// drawn in log-radial coordinates and carry their merged component.
inline std::string curves_svg(const CurveSet& cs) {
    const bool J = cs.plane == "J";
    auto map = [&](std::complex<double> p) { return J ? log_radial(p) : p; };
    double x0, x1, y0, y1;
    if (J) {
        x0 = y0 = std::numeric_limits<double>::infinity();
        x1 = y1 = -x0;
        for (const auto& l : cs.lines) {
            for (const auto& p : l.pts) {
                const auto q = map(p);
                x0 = std::min(x0, q.real()), x1 = std::max(x1, q.real());
                y0 = std::min(y0, q.imag()), y1 = std::max(y1, q.imag());
            }
        }
        if (!(x1 > x0)) x0 = -1, x1 = 1;
        if (!(y1 > y0)) y0 = -1, y1 = 1;
        const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
        x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
    } else {
        x0 = cs.grid.re_lo, x1 = cs.grid.re_hi, y0 = cs.grid.im_lo, y1 = cs.grid.im_hi;
    }
    const double width = 600, height = std::round(width * (y1 - y0) / (x1 - x0));
    auto px = [&](std::complex<double> p) {
        const auto q = map(p);
        return detail::fixed((q.real() - x0) / (x1 - x0) * width, 2) + ',' +
               detail::fixed((y1 - q.imag()) / (y1 - y0) * height, 2);
    };
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    std::map<std::string, std::size_t> colour;
    for (const auto& l : cs.lines) colour.emplace(l.label, 0);
    std::size_t c = 0;
    for (auto& [label, k] : colour) k = c++ % (sizeof palette / sizeof *palette);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 "
        << width << ' ' << height << "\">\n";
    out << "<title>m=" << cs.m << ' ' << (J ? "J" : "tau") << "-plane</title>\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!J && cs.grid.mask) {
        // the unit circle bounding the fundamental domain
        out << "<path d=\"";
        for (int k = 0; k <= 64; ++k) {
            const double t = std::numbers::pi / 3 + (std::numbers::pi / 3) * k / 64;
            out << (k ? " L" : "M") << px(std::polar(1.0, t));
        }
        out << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
    }
    for (std::size_t s = 0; s < cs.lines.size(); ++s) {
        const auto& l = cs.lines[s];
        if (l.pts.empty()) continue;
        out << "<path id=\"seg" << s << "\" data-label=\"" << l.label << '"';
        if (J && s < cs.merged_of.size()) out << " data-component=\"" << cs.merged_of[s] << '"';
        out << " d=\"";
        for (std::size_t i = 0; i < l.pts.size(); ++i) out << (i ? " L" : "M") << px(l.pts[i]);
        if (l.closed) out << " Z";
        out << "\" fill=\"none\" stroke=\"" << palette[colour[l.label]] << "\" stroke-width=\"1.2\"><title>" << l.label
            << "</title></path>\n";
    }
    out << "</svg>\n";
    return out.str();
}

/// Writes lw_m{m}_{plane}.csv and .svg into dir and returns the paths written.
inline std::vector<std::string> write_curves(const CurveSet& cs, const std::string& dir) {
    const std::string stem = dir + (dir.empty() || dir.back() == '/' ? "" : "/") + "lw_m" + std::to_string(cs.m) + '_' + cs.plane;
    detail::write_file(stem + ".csv", curves_csv(cs));
    detail::write_file(stem + ".svg", curves_svg(cs));
    return {stem + ".csv", stem + ".svg"};
}

}  // namespace lame
