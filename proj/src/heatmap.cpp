// Copyright 2026 The shadowprint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shadowprint/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "shadowprint/error.hpp"

namespace shadowprint {

namespace {

constexpr int kCellWidth = 44;
constexpr int kCellHeight = 30;
constexpr int kLeftMargin = 120;
constexpr int kTopMargin = 70;
constexpr int kLegendGap = 30;
constexpr int kLegendWidth = 18;

std::string fmt(const char* pattern, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out.push_back(c);
        }
    }
    return out;
}

std::uint8_t lerp_channel(std::uint8_t from, std::uint8_t to, double t) {
    return static_cast<std::uint8_t>(std::lround(from + (static_cast<double>(to) - from) * t));
}

}  // namespace

double scale_endpoint(double max_abs) {
    if (!(max_abs > 0.0) || !std::isfinite(max_abs)) {
        return 1.0;
    }
    const double magnitude = std::pow(10.0, std::floor(std::log10(max_abs)));
    double q = max_abs / magnitude;
    // Absorb representation error so exact one-digit values stay put.
    if (std::abs(q - std::round(q)) < 1e-9) {
        q = std::round(q);
    }
    return std::ceil(q) * magnitude;
}

Rgb diverging_color(double value, double endpoint) {
    const double t = std::clamp(value / endpoint, -1.0, 1.0);
    const Rgb& end = t < 0.0 ? kNegativeColor : kPositiveColor;
    const double w = std::abs(t);
    return {lerp_channel(kNeutralColor.r, end.r, w), lerp_channel(kNeutralColor.g, end.g, w),
            lerp_channel(kNeutralColor.b, end.b, w)};
}

std::string to_hex(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

std::string render_heatmap_svg(const HeatmapSpec& spec) {
    const RealMatrix& m = spec.matrix;
    if (m.empty()) {
        throw InvalidInput("cannot render an empty heatmap");
    }
    if (spec.row_labels.size() != m.rows() || spec.col_labels.size() != m.cols()) {
        throw InvalidInput("heatmap labels do not match the matrix dimensions");
    }
    double max_abs = 0.0;
    for (double v : m.values()) max_abs = std::max(max_abs, std::abs(v));
    const double endpoint = scale_endpoint(max_abs);

    const int grid_w = static_cast<int>(m.cols()) * kCellWidth;
    const int grid_h = static_cast<int>(m.rows()) * kCellHeight;
    const int legend_x = kLeftMargin + grid_w + kLegendGap;
    const int width = legend_x + kLegendWidth + 70;
    const int height = kTopMargin + grid_h + 20;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"Helvetica, Arial, sans-serif\">\n"
        << "<defs><linearGradient id=\"scale\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">"
        << "<stop offset=\"0\" stop-color=\"" << to_hex(kNegativeColor) << "\"/>"
        << "<stop offset=\"0.5\" stop-color=\"" << to_hex(kNeutralColor) << "\"/>"
        << "<stop offset=\"1\" stop-color=\"" << to_hex(kPositiveColor) << "\"/>"
        << "</linearGradient></defs>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    if (!spec.title.empty()) {
        svg << "<text class=\"title\" x=\"" << kLeftMargin << "\" y=\"20\" font-size=\"14\">" << escape_xml(spec.title)
            << "</text>\n";
    }

    for (std::size_t c = 0; c < m.cols(); ++c) {
        const int x = kLeftMargin + static_cast<int>(c) * kCellWidth + kCellWidth / 2;
        svg << "<text class=\"col-label\" x=\"" << x << "\" y=\"" << kTopMargin - 8
            << "\" font-size=\"11\" text-anchor=\"middle\">" << escape_xml(spec.col_labels[c]) << "</text>\n";
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const int y = kTopMargin + static_cast<int>(r) * kCellHeight + kCellHeight / 2 + 4;
        svg << "<text class=\"row-label\" x=\"" << kLeftMargin - 8 << "\" y=\"" << y
            << "\" font-size=\"11\" text-anchor=\"end\">" << escape_xml(spec.row_labels[r]) << "</text>\n";
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const double v = m(r, c);
            svg << "<rect class=\"cell\" x=\"" << kLeftMargin + static_cast<int>(c) * kCellWidth << "\" y=\""
                << kTopMargin + static_cast<int>(r) * kCellHeight << "\" width=\"" << kCellWidth << "\" height=\""
                << kCellHeight << "\" fill=\"" << to_hex(diverging_color(v, endpoint))
                << "\" stroke=\"#d0d0d0\" stroke-width=\"0.5\"><title>" << escape_xml(spec.row_labels[r]) << " / "
                << escape_xml(spec.col_labels[c]) << ": " << fmt("%.6g", v) << "</title></rect>\n";
        }
    }

    svg << "<g class=\"legend\">\n"
        << "<rect x=\"" << legend_x << "\" y=\"" << kTopMargin << "\" width=\"" << kLegendWidth << "\" height=\""
        << grid_h << "\" fill=\"url(#scale)\" stroke=\"#808080\" stroke-width=\"0.5\"/>\n";
    const int label_x = legend_x + kLegendWidth + 6;
    svg << "<text class=\"legend-label\" x=\"" << label_x << "\" y=\"" << kTopMargin + 10 << "\" font-size=\"11\">"
        << fmt("%+.3g", endpoint) << "</text>\n"
        << "<text class=\"legend-label\" x=\"" << label_x << "\" y=\"" << kTopMargin + grid_h / 2 + 4
        << "\" font-size=\"11\">0</text>\n"
        << "<text class=\"legend-label\" x=\"" << label_x << "\" y=\"" << kTopMargin + grid_h
        << "\" font-size=\"11\">" << fmt("%+.3g", -endpoint) << "</text>\n"
        << "</g>\n</svg>\n";
    return svg.str();
}

void render_heatmap(const HeatmapSpec& spec, const std::string& path) {
    const std::string svg = render_heatmap_svg(spec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << svg;
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

HeatmapSpec fingerprint_heatmap(const FingerprintMatrix& f, std::string title) {
    HeatmapSpec spec;
    spec.matrix = f.deviations;
    for (const auto& s : f.suite.states) spec.row_labels.push_back(s.state_id);
    for (const auto& p : f.suite.observables) spec.col_labels.push_back(p.label());
    spec.title = std::move(title);
    return spec;
}

}  // namespace shadowprint
