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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "sog/errors.hpp"
#include "sog/statevector.hpp"

namespace sog {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb &, const Rgb &) = default;
};

/// One stacked bar: a non-vanishing basis state drawn at its phase angle,
/// occupying the band [y_offset, y_offset + height] of the unit-height chart.
struct Bar {
    std::uint64_t basis_index = 0;
    std::string ket_label;
    double angle = 0.0;    ///< radians, (-pi, pi]
    double height = 0.0;   ///< measurement probability
    double y_offset = 0.0; ///< summed height of the bars below
    Rgb color;
    std::size_t nonzero_rank = 0;

    friend bool operator==(const Bar &, const Bar &) = default;
};

/// Backend-independent description of a state-o-gram. The x range is
/// (-pi, pi] and the y range [0, 1]; both are fixed.
struct StateogramLayout {
    std::size_t n_qubits = 0;
    std::vector<Bar> bars;              ///< ascending basis index
    std::vector<std::string> vanishing; ///< ket labels, ascending basis index

    friend bool operator==(const StateogramLayout &, const StateogramLayout &) = default;
};

/// "|x_{n-1}...x_1 x_0⟩", most significant qubit first.
[[nodiscard]] inline std::string ket_label(std::uint64_t basis_index, std::size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > 63 || basis_index >= (std::uint64_t{1} << n_qubits)) {
        throw domain_error("basis index " + std::to_string(basis_index) +
                           " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    std::string label = "|";
    for (std::size_t q = n_qubits; q-- > 0;) {
        label += ((basis_index >> q) & 1U) != 0 ? '1' : '0';
    }
    label += "⟩";
    return label;
}

namespace detail {

inline std::uint8_t to_channel(double unit) {
    return static_cast<std::uint8_t>(std::lround(unit * 255.0));
}

/// HSV to RGB with hue in degrees [0, 360).
inline Rgb hsv_to_rgb(double hue, double saturation, double value) {
    const double chroma = value * saturation;
    const double sector = hue / 60.0;
    const double x = chroma * (1.0 - std::abs(std::fmod(sector, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (sector < 1) {
        r = chroma, g = x;
    } else if (sector < 2) {
        r = x, g = chroma;
    } else if (sector < 3) {
        g = chroma, b = x;
    } else if (sector < 4) {
        g = x, b = chroma;
    } else if (sector < 5) {
        r = x, b = chroma;
    } else {
        r = chroma, b = x;
    }
    const double m = value - chroma;
    return {to_channel(r + m), to_channel(g + m), to_channel(b + m)};
}

} // namespace detail

inline constexpr double kBarColorValue = 0.85;

/// Blue (hue 240) for rank 0 shading linearly to red (hue 0) for the last
/// rank. A single non-vanishing state is drawn blue.
[[nodiscard]] inline Rgb color_for_rank(std::size_t rank, std::size_t nonzero_count) {
    if (rank >= nonzero_count) {
        throw domain_error("rank " + std::to_string(rank) + " out of range for " +
                           std::to_string(nonzero_count) + " non-vanishing states");
    }
    const double t = nonzero_count == 1
                         ? 0.0
                         : static_cast<double>(rank) / static_cast<double>(nonzero_count - 1);
    return detail::hsv_to_rgb(240.0 * (1.0 - t), 1.0, kBarColorValue);
}

[[nodiscard]] inline StateogramLayout compute_layout(const QuantumState &s) {
    StateogramLayout layout;
    layout.n_qubits = s.n_qubits();
    const auto amps = s.amplitudes();

    std::size_t nonzero = 0;
    for (const Amplitude &a : amps) {
        nonzero += is_vanishing(a) ? 0 : 1;
    }
    layout.bars.reserve(nonzero);

    double stacked = 0.0;
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if (is_vanishing(amps[b])) {
            layout.vanishing.push_back(ket_label(b, s.n_qubits()));
            continue;
        }
        Bar bar;
        bar.basis_index = b;
        bar.ket_label = ket_label(b, s.n_qubits());
        bar.angle = phase_angle(amps[b]);
        bar.height = probability(amps[b]);
        bar.y_offset = stacked;
        bar.nonzero_rank = layout.bars.size();
        bar.color = color_for_rank(bar.nonzero_rank, nonzero);
        stacked += bar.height;
        layout.bars.push_back(std::move(bar));
    }
    return layout;
}

} // namespace sog
