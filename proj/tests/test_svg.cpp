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
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sog/circuit.hpp"
#include "sog/layout.hpp"
#include "sog/simulator.hpp"
#include "sog/svg.hpp"
#include "support/generators.hpp"
#include "support/svg_audit.hpp"

using namespace sog;
using Catch::Approx;
constexpr double pi = std::numbers::pi;
const double r2 = 1.0 / std::sqrt(2.0);

namespace {

StateogramLayout fig1_layout() { return compute_layout(QuantumState(1, {{0, r2}, {0, -r2}})); }

StateogramLayout bell_layout() {
    return run_circuit(Circuit{2, {0, 0}, {{Gate::h(0)}, {Gate::cnot(0, 1)}}}).back().layout;
}

std::size_t count(const std::string &haystack, const std::string &needle) {
    std::size_t n = 0;
    for (auto at = haystack.find(needle); at != std::string::npos; at = haystack.find(needle, at + 1)) {
        ++n;
    }
    return n;
}

/// Compares against tests/golden/<name>; SOG_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string &name, const std::string &svg) {
    const std::string path = std::string(SOG_GOLDEN_DIR) + "/" + name;
    if (std::getenv("SOG_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(path, std::ios::binary) << svg;
    }
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream golden;
    golden << in.rdbuf();
    CHECK(golden.str() == svg);
}

} // namespace

TEST_CASE("render_svg: single-qubit chart", "[svg]") {
    const std::string svg = render_svg(fig1_layout());
    CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg ", 0) == 0);
    const auto bars = testing::audit_bars(svg);
    REQUIRE(bars.size() == 2);
    CHECK(bars[0].angle == Approx(pi / 2).margin(1e-3));
    CHECK(bars[0].y_offset == Approx(0).margin(1e-3));
    CHECK(bars[0].height == Approx(0.5).margin(1e-3));
    CHECK(bars[1].angle == Approx(-pi / 2).margin(1e-3));
    CHECK(bars[1].y_offset == Approx(0.5).margin(1e-3));
    CHECK(svg.find("data-basis=\"0\"") < svg.find("fill=\"#0000d9\""));
    CHECK(svg.find("fill=\"#d90000\"") != std::string::npos);
    CHECK(svg.find(">|0⟩</text>") != std::string::npos);
    CHECK(svg.find(">|1⟩</text>") != std::string::npos);
    for (const char *tick : {">−π<", ">−π/2<", ">0<", ">π/2<", ">π<", ">0%<", ">25%<", ">50%<", ">75%<", ">100%<"}) {
        CHECK(svg.find(tick) != std::string::npos);
    }
    CHECK(svg.find("class=\"vanishing\"") == std::string::npos);
    // Axes are drawn before bars, bars before labels.
    CHECK(svg.find("class=\"frame\"") < svg.find("class=\"bar\""));
    CHECK(svg.rfind("class=\"bar\"") < svg.find("class=\"label\""));
    check_golden("single_qubit.svg", svg);
}

TEST_CASE("render_svg: Bell state shows the vanishing box", "[svg]") {
    const std::string svg = render_svg(bell_layout());
    const auto bars = testing::audit_bars(svg);
    REQUIRE(bars.size() == 2);
    for (const auto &bar : bars) {
        CHECK(bar.angle == Approx(0).margin(1e-3));
        CHECK(bar.height == Approx(0.5).margin(1e-3));
    }
    CHECK(svg.find("class=\"vanishing\"") != std::string::npos);
    CHECK(svg.find(">|01⟩ |10⟩</text>") != std::string::npos);
    check_golden("bell.svg", svg);

    RenderStyle hidden;
    hidden.show_vanishing_box = false;
    CHECK(render_svg(bell_layout(), hidden).find("class=\"vanishing\"") == std::string::npos);
}

TEST_CASE("render_svg: vanishing box elides past 16 entries", "[svg]") {
    const auto layout = compute_layout(basis_state(5, 0));
    const std::string svg = render_svg(layout);
    CHECK(svg.find("… and 15 more") != std::string::npos);
    CHECK(svg.find("|10000⟩") != std::string::npos);
    CHECK(svg.find("|10001⟩") == std::string::npos);
}

TEST_CASE("render_svg: titles are escaped, bars at ±pi stay inside the frame", "[svg]") {
    RenderStyle style;
    style.title = "a<b & \"c\"";
    const std::string svg = render_svg(compute_layout(QuantumState(1, {{-r2, 0}, {r2, 0}})), style);
    CHECK(svg.find("a&lt;b &amp; &quot;c&quot;") != std::string::npos);
    const auto bars = testing::audit_bars(svg);
    REQUIRE(bars.size() == 2);
    CHECK(bars[0].angle == Approx(pi).margin(1e-3));
    CHECK(bars[1].angle == Approx(0).margin(1e-3));
}

TEST_CASE("render_svg: invalid styles are rejected", "[svg]") {
    RenderStyle style;
    style.bar_width_px = 80; // == width / 8
    CHECK_THROWS_AS(render_svg(fig1_layout(), style), sog::domain_error);
    style = {};
    style.height_px = -1;
    CHECK_THROWS_AS(render_svg(fig1_layout(), style), sog::domain_error);
    style = {};
    style.width_px = 60;
    style.bar_width_px = 2;
    CHECK_THROWS_AS(render_svg(fig1_layout(), style), sog::domain_error);
}

TEST_CASE("render_strip numbers panels left to right", "[svg]") {
    std::vector<StateogramLayout> layouts;
    for (const auto &step : run_circuit(Circuit{1, {0}, {{Gate::h(0)}, {Gate::h(0)}}})) {
        layouts.push_back(step.layout);
    }
    const std::string strip = render_strip(layouts);
    CHECK(count(strip, "class=\"panel\"") == 3);
    CHECK(strip.find(">(1)<") < strip.find(">(2)<"));
    CHECK(strip.find(">(2)<") < strip.find(">(3)<"));
    CHECK(strip.find("width=\"1920.0000\"") != std::string::npos);
    check_golden("hadamard_twice_strip.svg", strip);

    const std::string single = render_strip({fig1_layout()});
    CHECK(count(single, ">(1)<") == 1);
    // Same plot body as render_svg, wrapped in a numbered panel.
    const std::string plain = render_svg(fig1_layout());
    const auto body = [](const std::string &svg) {
        const auto from = svg.find("<rect class=\"frame\"");
        return svg.substr(from, svg.rfind("</svg>") - from);
    };
    CHECK(body(single).rfind(body(plain).substr(0, body(plain).size()), 0) == 0);

    CHECK_THROWS_AS(render_strip({}), sog::domain_error);
}

TEST_CASE("property: SVG geometry audit and determinism", "[svg][property]") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial) % 6;
        const auto state = trial % 2 == 0 ? testing::random_state(n, rng)
                                          : testing::random_sparse_state(n, rng);
        const auto layout = compute_layout(state);
        const std::string svg = render_svg(layout);
        REQUIRE(render_svg(layout) == svg);

        const auto bars = testing::audit_bars(svg);
        REQUIRE(bars.size() == layout.bars.size());
        for (std::size_t k = 0; k < bars.size(); ++k) {
            REQUIRE(bars[k].basis == layout.bars[k].basis_index);
            REQUIRE(std::abs(bars[k].angle - layout.bars[k].angle) < 1e-3);
            REQUIRE(std::abs(bars[k].height - layout.bars[k].height) < 1e-3);
            REQUIRE(std::abs(bars[k].y_offset - layout.bars[k].y_offset) < 1e-3);
            // Stacked bands never overlap vertically.
            if (k > 0) {
                REQUIRE(bars[k].bottom_px <= bars[k - 1].top_px + 1e-3);
            }
        }
    }
}
