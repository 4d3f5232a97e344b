#include "steepfront/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "steepfront/error.hpp"

namespace steepfront {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::string SvgPlot::render() const {
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto& c : curves) {
        for (double v : c.x) {
            x_lo = std::min(x_lo, v);
            x_hi = std::max(x_hi, v);
        }
        for (double v : c.y) {
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    }
    for (double v : vertical_markers) {
        x_lo = std::min(x_lo, v);
        x_hi = std::max(x_hi, v);
    }
    if (!std::isfinite(x_lo) || !std::isfinite(y_lo)) {
        x_lo = y_lo = 0.0;
        x_hi = y_hi = 1.0;
    }
    if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    if (y_hi <= y_lo) y_hi = y_lo + 1.0;
    const double x_pad = 0.04 * (x_hi - x_lo);
    const double y_pad = 0.06 * (y_hi - y_lo);
    x_lo -= x_pad;
    x_hi += x_pad;
    y_lo -= y_pad;
    y_hi += y_pad;

    const double ml = 64, mr = 16, mt = 34, mb = 44; // margins
    const double pw = width - ml - mr;
    const double ph = height - mt - mb;
    auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return mt + (y_hi - y) / (y_hi - y_lo) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\""
        << ph << "\" fill=\"none\" stroke=\"#444\"/>\n";
    if (!title.empty()) {
        svg << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
    }

    for (int k = 0; k <= 4; ++k) {
        const double xv = x_lo + (x_hi - x_lo) * k / 4.0;
        const double yv = y_lo + (y_hi - y_lo) * k / 4.0;
        svg << "<line x1=\"" << num(px(xv)) << "\" y1=\"" << mt + ph << "\" x2=\""
            << num(px(xv)) << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"#444\"/>\n";
        svg << "<text x=\"" << num(px(xv)) << "\" y=\"" << mt + ph + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << num(xv) << "</text>\n";
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << num(py(yv)) << "\" x2=\"" << ml
            << "\" y2=\"" << num(py(yv)) << "\" stroke=\"#444\"/>\n";
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << num(py(yv) + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << num(yv) << "</text>\n";
    }
    if (!x_label.empty()) {
        svg << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 8
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << x_label << "</text>\n";
    }
    if (!y_label.empty()) {
        svg << "<text x=\"14\" y=\"" << mt + ph / 2 << "\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 14 "
            << mt + ph / 2 << ")\">" << y_label << "</text>\n";
    }

    for (double xm : vertical_markers) {
        svg << "<line x1=\"" << num(px(xm)) << "\" y1=\"" << mt << "\" x2=\"" << num(px(xm))
            << "\" y2=\"" << mt + ph
            << "\" stroke=\"#b23a1f\" stroke-dasharray=\"5,4\" stroke-width=\"1\"/>\n";
    }

    int label_row = 0;
    for (const auto& c : curves) {
        if (c.x.empty()) continue;
        svg << "<polyline fill=\"none\" stroke=\"" << c.color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (i) svg << ' ';
            svg << num(px(c.x[i])) << ',' << num(py(c.y[i]));
        }
        svg << "\"/>\n";
        if (!c.label.empty()) {
            svg << "<text x=\"" << ml + pw - 6 << "\" y=\"" << mt + 16 + 14 * label_row
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
                << "fill=\"" << c.color << "\">" << c.label << "</text>\n";
            ++label_row;
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

void SvgPlot::write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << render();
}

} // namespace steepfront
