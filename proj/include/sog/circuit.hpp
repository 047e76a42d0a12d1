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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sog/errors.hpp"
#include "sog/statevector.hpp"

namespace sog {

enum class GateKind { H, X, Y, Z, S, Sdg, T, Tdg, Phase, CNOT, CZ, SWAP, CCNOT };

inline constexpr std::array kAllGateKinds{GateKind::H,    GateKind::X,     GateKind::Y,
                                          GateKind::Z,    GateKind::S,     GateKind::Sdg,
                                          GateKind::T,    GateKind::Tdg,   GateKind::Phase,
                                          GateKind::CNOT, GateKind::CZ,    GateKind::SWAP,
                                          GateKind::CCNOT};

/// Number of qubits a gate of this kind acts on.
[[nodiscard]] constexpr std::size_t arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
        return 2;
    case GateKind::CCNOT:
        return 3;
    default:
        return 1;
    }
}

/// Canonical (upper-case) name used by the circuit format.
[[nodiscard]] constexpr std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "TDG";
    case GateKind::Phase: return "PHASE";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CCNOT: return "CCNOT";
    }
    return "?";
}

/// Case-insensitive lookup of a gate name.
[[nodiscard]] inline std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) {
        return static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
    });
    for (GateKind kind : kAllGateKinds) {
        if (gate_name(kind) == upper) {
            return kind;
        }
    }
    return std::nullopt;
}

/// A gate placement. Controls come first in `targets` (CNOT: control,
/// target; CCNOT: control, control, target). `theta` is only meaningful
/// for Phase.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<std::size_t> targets;
    double theta = 0.0;

    friend bool operator==(const Gate &, const Gate &) = default;

    static Gate h(std::size_t q) { return {GateKind::H, {q}}; }
    static Gate x(std::size_t q) { return {GateKind::X, {q}}; }
    static Gate y(std::size_t q) { return {GateKind::Y, {q}}; }
    static Gate z(std::size_t q) { return {GateKind::Z, {q}}; }
    static Gate s(std::size_t q) { return {GateKind::S, {q}}; }
    static Gate phase(std::size_t q, double theta) { return {GateKind::Phase, {q}, theta}; }
    static Gate cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, {control, target}};
    }
    static Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, {a, b}}; }
    static Gate swap(std::size_t a, std::size_t b) { return {GateKind::SWAP, {a, b}}; }
    static Gate ccnot(std::size_t c0, std::size_t c1, std::size_t target) {
        return {GateKind::CCNOT, {c0, c1, target}};
    }
};

using Column = std::vector<Gate>;

struct Circuit {
    std::size_t n_qubits = 1;
    std::vector<int> init;     ///< classical start value of each qubit
    std::vector<Column> columns;

    friend bool operator==(const Circuit &, const Circuit &) = default;

    /// Basis index of the classical initial state.
    [[nodiscard]] std::uint64_t init_index() const {
        std::uint64_t index = 0;
        for (std::size_t q = 0; q < init.size(); ++q) {
            if (init[q] != 0) {
                index |= std::uint64_t{1} << q;
            }
        }
        return index;
    }
};

namespace detail {

inline std::string column_prefix(std::size_t column) {
    return "column " + std::to_string(column) + ": ";
}

inline void validate_gate(const Gate &g, std::size_t n_qubits,
                          std::optional<std::size_t> column) {
    const std::string where = column ? column_prefix(*column) : std::string{};
    const std::string name(gate_name(g.kind));
    if (g.targets.size() != arity(g.kind)) {
        throw validation_error(where + name + " takes " + std::to_string(arity(g.kind)) +
                                   " target(s), got " + std::to_string(g.targets.size()),
                               column);
    }
    for (std::size_t i = 0; i < g.targets.size(); ++i) {
        const std::size_t q = g.targets[i];
        if (q >= n_qubits) {
            throw validation_error(where + name + " target qubit " + std::to_string(q) +
                                       " out of range for " + std::to_string(n_qubits) +
                                       " qubits",
                                   column, q);
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (g.targets[j] == q) {
                throw validation_error(where + name + " lists qubit " + std::to_string(q) +
                                           " more than once",
                                       column, q);
            }
        }
    }
    if (g.kind == GateKind::Phase && !std::isfinite(g.theta)) {
        throw validation_error(where + "PHASE angle must be finite", column);
    }
}

} // namespace detail

/// Throws validation_error on the first violated circuit invariant.
inline void validate(const Circuit &c) {
    if (c.n_qubits == 0) {
        throw validation_error("circuit needs at least one qubit");
    }
    if (c.init.size() != c.n_qubits) {
        throw validation_error("init lists " + std::to_string(c.init.size()) +
                               " bits for " + std::to_string(c.n_qubits) + " qubits");
    }
    for (std::size_t q = 0; q < c.init.size(); ++q) {
        if (c.init[q] != 0 && c.init[q] != 1) {
            throw validation_error("init bit of qubit " + std::to_string(q) +
                                       " must be 0 or 1",
                                   std::nullopt, q);
        }
    }
    for (std::size_t col = 0; col < c.columns.size(); ++col) {
        std::vector<bool> used(c.n_qubits, false);
        for (const Gate &g : c.columns[col]) {
            detail::validate_gate(g, c.n_qubits, col);
            for (std::size_t q : g.targets) {
                if (used[q]) {
                    throw validation_error(detail::column_prefix(col) + "qubit " +
                                               std::to_string(q) +
                                               " is used by more than one gate",
                                           col, q);
                }
                used[q] = true;
            }
        }
    }
}

namespace detail {

using Matrix2 = std::array<Amplitude, 4>; // row-major

inline void apply_matrix2(std::vector<Amplitude> &amps, std::size_t target,
                          const Matrix2 &m) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[i + stride];
            amps[i] = m[0] * a0 + m[1] * a1;
            amps[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

/// Multiplies the |1> component of `target` by `factor`.
inline void apply_diagonal(std::vector<Amplitude> &amps, std::size_t target,
                           Amplitude factor) {
    const std::size_t bit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & bit) != 0) {
            amps[i] *= factor;
        }
    }
}

inline void apply_hadamard(std::vector<Amplitude> &amps, std::size_t target) {
    const double r = std::numbers::sqrt2 / 2.0;
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Amplitude a0 = amps[i];
            const Amplitude a1 = amps[i + stride];
            amps[i] = (a0 + a1) * r;
            amps[i + stride] = (a0 - a1) * r;
        }
    }
}

/// Swaps amplitude pairs that differ only in `flip`, restricted to indices
/// where all `controls` bits are set.
inline void apply_controlled_flip(std::vector<Amplitude> &amps, std::size_t controls,
                                  std::size_t flip) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & controls) == controls && (i & flip) == 0) {
            std::swap(amps[i], amps[i | flip]);
        }
    }
}

inline void apply_in_place(std::vector<Amplitude> &amps, const Gate &g) {
    const auto bit = [&](std::size_t k) { return std::size_t{1} << g.targets[k]; };
    const Amplitude i{0.0, 1.0};
    const double r = std::numbers::sqrt2 / 2.0;
    switch (g.kind) {
    case GateKind::H:
        apply_hadamard(amps, g.targets[0]);
        break;
    case GateKind::X:
        apply_controlled_flip(amps, 0, bit(0));
        break;
    case GateKind::Y:
        apply_matrix2(amps, g.targets[0], {Amplitude{}, -i, i, Amplitude{}});
        break;
    case GateKind::Z:
        apply_diagonal(amps, g.targets[0], -1.0);
        break;
    case GateKind::S:
        apply_diagonal(amps, g.targets[0], i);
        break;
    case GateKind::Sdg:
        apply_diagonal(amps, g.targets[0], -i);
        break;
    case GateKind::T:
        apply_diagonal(amps, g.targets[0], Amplitude{r, r});
        break;
    case GateKind::Tdg:
        apply_diagonal(amps, g.targets[0], Amplitude{r, -r});
        break;
    case GateKind::Phase:
        apply_diagonal(amps, g.targets[0], std::polar(1.0, g.theta));
        break;
    case GateKind::CNOT:
        apply_controlled_flip(amps, bit(0), bit(1));
        break;
    case GateKind::CCNOT:
        apply_controlled_flip(amps, bit(0) | bit(1), bit(2));
        break;
    case GateKind::CZ: {
        const std::size_t both = bit(0) | bit(1);
        for (std::size_t k = 0; k < amps.size(); ++k) {
            if ((k & both) == both) {
                amps[k] = -amps[k];
            }
        }
        break;
    }
    case GateKind::SWAP: {
        const std::size_t a = bit(0);
        const std::size_t b = bit(1);
        for (std::size_t k = 0; k < amps.size(); ++k) {
            if ((k & a) != 0 && (k & b) == 0) {
                std::swap(amps[k], amps[(k & ~a) | b]);
            }
        }
        break;
    }
    }
}

} // namespace detail

/// U·s where U is the gate's unitary on its targets and identity elsewhere.
[[nodiscard]] inline QuantumState apply_gate(const QuantumState &s, const Gate &g) {
    detail::validate_gate(g, s.n_qubits(), std::nullopt);
    std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
    detail::apply_in_place(amps, g);
    return {QuantumState::unchecked, s.n_qubits(), std::move(amps)};
}

/// H on every qubit. For a basis input |y> the amplitude at |x> is
/// 2^(-n/2) (-1)^popcount(x & y).
[[nodiscard]] inline QuantumState hadamard_all(const QuantumState &s) {
    std::vector<Amplitude> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (std::size_t q = 0; q < s.n_qubits(); ++q) {
        detail::apply_hadamard(amps, q);
    }
    return {QuantumState::unchecked, s.n_qubits(), std::move(amps)};
}

} // namespace sog
