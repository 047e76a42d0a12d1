// Copyright 2026 The state-o-gram Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sog/errors.hpp"
#include "sog/layout.hpp"

namespace sog {

struct RenderStyle {
    double width_px = 640;
    double height_px = 400;
    double bar_width_px = 14;
    /// Inset of the ±pi positions from the plot frame so edge bars stay inside.
    double margin_px = 10;
    double font_size_px = 12;
    bool show_vanishing_box = true;
    std::optional<std::string> title;
};

inline constexpr std::size_t kVanishingBoxMaxEntries = 16;

namespace svg {

inline constexpr double kPadLeft = 44;
inline constexpr double kPadRight = 16;
inline constexpr double kPadTop = 30;
inline constexpr double kPadBottom = 28;

/// Fixed 4-decimal, locale-independent number text.
inline std::string num(double v) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::fixed, 4);
    std::string out(buf.data(), end);
    if (out == "-0.0000") {
        out = "0.0000";
    }
    return out;
}

inline std::string escape(std::string_view text) {
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

inline std::string hex(Rgb c) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "#";
    for (std::uint8_t v : {c.r, c.g, c.b}) {
        out += digits[v >> 4];
        out += digits[v & 0x0F];
    }
    return out;
}

/// Maps chart coordinates (angle, probability) to panel pixels.
struct PlotGeometry {
    double left, right, top, bottom, inset;

    explicit PlotGeometry(const RenderStyle &style)
        : left(kPadLeft), right(style.width_px - kPadRight), top(kPadTop),
          bottom(style.height_px - kPadBottom), inset(style.margin_px) {}

    [[nodiscard]] double x(double angle) const {
        const double span = right - left - 2 * inset;
        return left + inset + (angle + std::numbers::pi) / (2 * std::numbers::pi) * span;
    }
    [[nodiscard]] double y(double probability) const {
        return bottom - probability * (bottom - top);
    }
};

inline void check_style(const RenderStyle &style) {
    const bool positive = style.width_px > 0 && style.height_px > 0 && style.bar_width_px > 0 &&
                          style.margin_px > 0 && style.font_size_px > 0;
    if (!positive) {
        throw domain_error("render style sizes must be positive");
    }
    if (!(style.bar_width_px < style.width_px / 8)) {
        throw domain_error("bar width must be less than one eighth of the chart width");
    }
    const PlotGeometry g(style);
    if (g.right - g.left <= 2 * style.margin_px || g.bottom <= g.top) {
        throw domain_error("render style leaves no room for the plot area");
    }
}

inline double vanishing_box_height(const StateogramLayout &layout, const RenderStyle &style) {
    if (!style.show_vanishing_box || layout.vanishing.empty()) {
        return 0;
    }
    return style.font_size_px * 2 + 8;
}

inline double panel_height(const StateogramLayout &layout, const RenderStyle &style) {
    return style.height_px + vanishing_box_height(layout, style);
}

inline void write_axes(std::ostringstream &out, const PlotGeometry &g,
                       const RenderStyle &style) {
    const std::string font = num(style.font_size_px);
    out << "<rect class=\"frame\" x=\"" << num(g.left) << "\" y=\"" << num(g.top)
        << "\" width=\"" << num(g.right - g.left) << "\" height=\"" << num(g.bottom - g.top)
        << "\" fill=\"none\" stroke=\"#000000\"/>\n";

    static constexpr std::array<std::pair<double, std::string_view>, 5> x_ticks{{
        {-1.0, "−π"}, {-0.5, "−π/2"}, {0.0, "0"}, {0.5, "π/2"}, {1.0, "π"}}};
    for (const auto &[fraction, text] : x_ticks) {
        const std::string x = num(g.x(fraction * std::numbers::pi));
        out << "<line class=\"grid\" x1=\"" << x << "\" y1=\"" << num(g.top) << "\" x2=\"" << x
            << "\" y2=\"" << num(g.bottom) << "\" stroke=\"#dddddd\"/>\n";
        out << "<line class=\"tick-x\" x1=\"" << x << "\" y1=\"" << num(g.bottom)
            << "\" x2=\"" << x << "\" y2=\"" << num(g.bottom + 4)
            << "\" stroke=\"#000000\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << num(g.bottom + 6 + style.font_size_px)
            << "\" font-size=\"" << font << "\" text-anchor=\"middle\">" << text
            << "</text>\n";
    }
    static constexpr std::array<std::pair<double, std::string_view>, 5> y_ticks{{
        {0.0, "0%"}, {0.25, "25%"}, {0.5, "50%"}, {0.75, "75%"}, {1.0, "100%"}}};
    for (const auto &[p, text] : y_ticks) {
        const std::string y = num(g.y(p));
        out << "<line class=\"tick-y\" x1=\"" << num(g.left - 4) << "\" y1=\"" << y
            << "\" x2=\"" << num(g.left) << "\" y2=\"" << y << "\" stroke=\"#000000\"/>\n";
        out << "<text x=\"" << num(g.left - 6) << "\" y=\"" << num(g.y(p) + style.font_size_px / 3)
            << "\" font-size=\"" << font << "\" text-anchor=\"end\">" << text << "</text>\n";
    }
}

inline void write_vanishing_box(std::ostringstream &out, const StateogramLayout &layout,
                                const PlotGeometry &g, const RenderStyle &style) {
    const double box_top = style.height_px;
    const double box_height = vanishing_box_height(layout, style) - 4;
    std::string listing;
    const std::size_t shown = std::min(layout.vanishing.size(), kVanishingBoxMaxEntries);
    for (std::size_t k = 0; k < shown; ++k) {
        listing += (k == 0 ? "" : " ") + layout.vanishing[k];
    }
    if (layout.vanishing.size() > shown) {
        listing += " … and " + std::to_string(layout.vanishing.size() - shown) + " more";
    }
    out << "<g class=\"vanishing\">\n";
    out << "<rect x=\"" << num(g.left) << "\" y=\"" << num(box_top) << "\" width=\""
        << num(g.right - g.left) << "\" height=\"" << num(box_height)
        << "\" fill=\"#e0e0e0\" stroke=\"#9e9e9e\"/>\n";
    out << "<text x=\"" << num(g.left + 6) << "\" y=\""
        << num(box_top + box_height / 2 + style.font_size_px / 3) << "\" font-size=\""
        << num(style.font_size_px) << "\" fill=\"#424242\">" << escape(listing)
        << "</text>\n";
    out << "</g>\n";
}

/// Panel body in panel-local coordinates.
inline void write_panel(std::ostringstream &out, const StateogramLayout &layout,
                        const RenderStyle &style, std::optional<std::size_t> number) {
    const PlotGeometry g(style);
    const std::string font = num(style.font_size_px);
    out << "<rect class=\"background\" x=\"0.0000\" y=\"0.0000\" width=\""
        << num(style.width_px) << "\" height=\"" << num(panel_height(layout, style))
        << "\" fill=\"#ffffff\"/>\n";
    if (number) {
        out << "<text class=\"panel-number\" x=\"6.0000\" y=\"" << num(style.font_size_px + 4)
            << "\" font-size=\"" << font << "\" font-weight=\"bold\">(" << *number
            << ")</text>\n";
    }
    if (style.title) {
        out << "<text class=\"title\" x=\"" << num(style.width_px / 2) << "\" y=\""
            << num(style.font_size_px + 4) << "\" font-size=\"" << font
            << "\" text-anchor=\"middle\">" << escape(*style.title) << "</text>\n";
    }
    write_axes(out, g, style);

    const double half = style.bar_width_px / 2;
    for (const Bar &bar : layout.bars) {
        const double center = g.x(bar.angle);
        const double x = std::clamp(center - half, g.left, g.right - style.bar_width_px);
        const double top = g.y(bar.y_offset + bar.height);
        out << "<rect class=\"bar\" data-basis=\"" << bar.basis_index << "\" x=\"" << num(x)
            << "\" y=\"" << num(top) << "\" width=\"" << num(style.bar_width_px)
            << "\" height=\"" << num(g.y(bar.y_offset) - top) << "\" fill=\""
            << hex(bar.color) << "\"/>\n";
    }
    for (const Bar &bar : layout.bars) {
        const double center = std::clamp(g.x(bar.angle), g.left + half, g.right - half);
        // Labels sit beside the bar, on the side facing the chart centre.
        const bool left_side = bar.angle > std::numbers::pi / 2;
        out << "<text class=\"label\" x=\"" << num(left_side ? center - half - 2 : center + half + 2)
            << "\" y=\"" << num(g.y(bar.y_offset + bar.height) + style.font_size_px)
            << "\" font-size=\"" << font << "\""
            << (left_side ? " text-anchor=\"end\"" : "") << ">" << escape(bar.ket_label)
            << "</text>\n";
    }
    if (vanishing_box_height(layout, style) > 0) {
        write_vanishing_box(out, layout, g, style);
    }
}

inline void write_header(std::ostringstream &out, double width, double height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
        << num(height) << "\" font-family=\"sans-serif\">\n";
}

} // namespace svg

/// One state-o-gram as a standalone SVG document.
[[nodiscard]] inline std::string render_svg(const StateogramLayout &layout,
                                            const RenderStyle &style = {}) {
    svg::check_style(style);
    std::ostringstream out;
    svg::write_header(out, style.width_px, svg::panel_height(layout, style));
    svg::write_panel(out, layout, style, std::nullopt);
    out << "</svg>\n";
    return out.str();
}

/// Panels left to right, numbered (1), (2), ...
[[nodiscard]] inline std::string render_strip(const std::vector<StateogramLayout> &layouts,
                                              const RenderStyle &style = {}) {
    if (layouts.empty()) {
        throw domain_error("render_strip needs at least one layout");
    }
    svg::check_style(style);
    double height = 0;
    for (const auto &layout : layouts) {
        height = std::max(height, svg::panel_height(layout, style));
    }
    std::ostringstream out;
    svg::write_header(out, style.width_px * static_cast<double>(layouts.size()), height);
    for (std::size_t k = 0; k < layouts.size(); ++k) {
        out << "<g class=\"panel\" transform=\"translate("
            << svg::num(style.width_px * static_cast<double>(k)) << ",0)\">\n";
        svg::write_panel(out, layouts[k], style, k + 1);
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace sog
