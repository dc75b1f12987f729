#include "skhp/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace skhp::cli {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr std::array<char const*, 8> kColours = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                  "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string escape(std::string const& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// roughly five round-numbered ticks covering [lo, hi]
std::vector<double> ticks(double lo, double hi) {
    double const span = hi - lo;
    double const raw = span / 5.0;
    double const mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> out;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step) out.push_back(t);
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void settle() {
        if (!(lo <= hi)) {
            lo = 0.0;
            hi = 1.0;
        } else if (lo == hi) {
            double const pad = lo == 0.0 ? 1.0 : 0.05 * std::abs(lo);
            lo -= pad;
            hi += pad;
        }
    }
};

} // namespace

std::string render_svg(Chart const& chart) {
    Range xr, yr;
    for (auto const& s : chart.series) {
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
                xr.include(s.x[i]);
                yr.include(s.y[i]);
            }
        }
    }
    xr.settle();
    yr.settle();

    double const plot_w = kWidth - kLeft - kRight;
    double const plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    auto py = [&](double y) { return kTop + (1.0 - (y - yr.lo) / (yr.hi - yr.lo)) * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
        << escape(chart.title) << "</text>\n";

    svg << "<g stroke=\"black\" fill=\"none\">\n"
        << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w) << "\" height=\""
        << num(plot_h) << "\"/>\n</g>\n";

    svg << "<g stroke=\"#999\" stroke-width=\"0.5\">\n";
    for (double t : ticks(xr.lo, xr.hi)) {
        svg << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(px(t))
            << "\" y2=\"" << num(kTop + plot_h + 5) << "\"/>\n";
    }
    for (double t : ticks(yr.lo, yr.hi)) {
        svg << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(t)) << "\" x2=\"" << num(kLeft) << "\" y2=\""
            << num(py(t)) << "\"/>\n";
    }
    svg << "</g>\n<g fill=\"black\">\n";
    for (double t : ticks(xr.lo, xr.hi)) {
        svg << "<text x=\"" << num(px(t)) << "\" y=\"" << num(kTop + plot_h + 18) << "\" text-anchor=\"middle\">"
            << tick_label(t) << "</text>\n";
    }
    for (double t : ticks(yr.lo, yr.hi)) {
        svg << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(t) + 4) << "\" text-anchor=\"end\">"
            << tick_label(t) << "</text>\n";
    }
    svg << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
        << "\" text-anchor=\"middle\">" << escape(chart.x_label) << "</text>\n"
        << "<text transform=\"translate(18," << num(kTop + plot_h / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
        << escape(chart.y_label) << "</text>\n</g>\n";

    for (std::size_t k = 0; k < chart.series.size(); ++k) {
        auto const& s = chart.series[k];
        char const* colour = kColours[k % kColours.size()];
        std::string points;
        auto flush = [&] {
            if (!points.empty()) {
                svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"" << points
                    << "\"/>\n";
            }
            points.clear();
        };
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                flush();
                continue;
            }
            if (!points.empty()) points += ' ';
            points += num(px(s.x[i])) + "," + num(py(s.y[i]));
        }
        flush();
        double const ly = kTop + 14 + 18 * static_cast<double>(k);
        double const lx = kLeft + plot_w + 12;
        svg << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(lx + 20) << "\" y2=\""
            << num(ly - 4) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << num(lx + 26) << "\" y=\"" << num(ly) << "\">" << escape(s.label) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace skhp::cli
