#ifndef STEEPFRONT_SVG_HPP
#define STEEPFRONT_SVG_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace steepfront {

/// Minimal static SVG line plots; no display dependencies.
struct SvgCurve {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f6fb2";
    std::string label;
};

struct SvgPlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<SvgCurve> curves;
    std::vector<double> vertical_markers; // dashed
    int width = 720;
    int height = 480;

    std::string render() const;
    void write(const std::filesystem::path& path) const;
};

} // namespace steepfront

#endif
