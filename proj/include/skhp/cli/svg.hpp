#pragma once

// Minimal SVG 1.1 line charts: axes with ticks, one polyline per series, legend.

#include <string>
#include <vector>

namespace skhp::cli {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
};

/// Non-finite points are skipped (they break the polyline).
std::string render_svg(Chart const& chart);

} // namespace skhp::cli
