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
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "sog/errors.hpp"

namespace sog {

using Amplitude = std::complex<double>;

/// An amplitude whose probability falls below this is treated as absent.
inline constexpr double kVanishThreshold = 1e-9;

/// Tolerance on Σ|a|² accepted when a state is built from raw amplitudes.
inline constexpr double kNormTolerance = 1e-10;

/// Largest register the library will allocate (2^30 amplitudes, 16 GiB).
inline constexpr std::size_t kMaxQubits = 30;

[[nodiscard]] inline double probability(Amplitude a) noexcept {
    return a.real() * a.real() + a.imag() * a.imag();
}

[[nodiscard]] inline bool is_vanishing(Amplitude a) noexcept {
    return probability(a) < kVanishThreshold;
}

/// arg(a) in (-pi, pi]. A result of exactly -pi is reported as +pi so that
/// negative reals sit on the right edge of the chart.
[[nodiscard]] inline double phase_angle(Amplitude a) {
    if (is_vanishing(a)) {
        throw undefined_phase_error("phase of a vanishing amplitude is undefined");
    }
    const double angle = std::atan2(a.imag(), a.real());
    return angle == -std::numbers::pi ? std::numbers::pi : angle;
}

/// Pure state of `n` qubits. Basis index b = sum_i x_i 2^i, so qubit i is
/// bit i and qubit 0 is the rightmost digit of a ket label.
class QuantumState {
  public:
    /// Skips the normalization check; for operations that are unitary by
    /// construction.
    struct unchecked_t {};
    static constexpr unchecked_t unchecked{};

    QuantumState(std::size_t n_qubits, std::vector<Amplitude> amplitudes)
        : QuantumState(unchecked, n_qubits, std::move(amplitudes)) {
        double total = 0.0;
        for (const auto &a : amplitudes_) {
            total += probability(a);
        }
        if (!(std::abs(total - 1.0) <= kNormTolerance)) {
            throw domain_error("state is not normalized: sum of probabilities is " +
                               std::to_string(total));
        }
    }

    QuantumState(unchecked_t, std::size_t n_qubits, std::vector<Amplitude> amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
        check_size(n_qubits_);
        if (amplitudes_.size() != dimension(n_qubits_)) {
            throw domain_error("expected " + std::to_string(dimension(n_qubits_)) +
                               " amplitudes for " + std::to_string(n_qubits_) +
                               " qubits, got " + std::to_string(amplitudes_.size()));
        }
    }

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] Amplitude operator[](std::size_t index) const { return amplitudes_[index]; }

    /// Moves the amplitude buffer out, leaving the state empty.
    [[nodiscard]] std::vector<Amplitude> release() && { return std::move(amplitudes_); }

    static std::size_t dimension(std::size_t n_qubits) {
        check_size(n_qubits);
        return std::size_t{1} << n_qubits;
    }

    friend bool operator==(const QuantumState &, const QuantumState &) = default;

  private:
    static void check_size(std::size_t n_qubits) {
        if (n_qubits == 0) {
            throw domain_error("a register needs at least one qubit");
        }
        if (n_qubits > kMaxQubits) {
            throw resource_error("register of " + std::to_string(n_qubits) +
                                 " qubits exceeds the limit of " +
                                 std::to_string(kMaxQubits));
        }
    }

    std::size_t n_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// |index> on `n_qubits` qubits: amplitude 1 at `index`, exact zeros elsewhere.
[[nodiscard]] inline QuantumState basis_state(std::size_t n_qubits, std::uint64_t index) {
    const std::size_t dim = QuantumState::dimension(n_qubits);
    if (index >= dim) {
        throw domain_error("basis index " + std::to_string(index) + " out of range for " +
                           std::to_string(n_qubits) + " qubits");
    }
    std::vector<Amplitude> amps(dim, Amplitude{0.0, 0.0});
    amps[index] = Amplitude{1.0, 0.0};
    return {QuantumState::unchecked, n_qubits, std::move(amps)};
}

/// Probability that measuring `qubits` yields `outcome` (outcome[k] is the
/// bit read from qubits[k]).
[[nodiscard]] inline double marginal_probability(const QuantumState &s,
                                                 std::span<const std::size_t> qubits,
                                                 std::span<const int> outcome) {
    if (qubits.size() != outcome.size()) {
        throw domain_error("outcome has " + std::to_string(outcome.size()) +
                           " bits but " + std::to_string(qubits.size()) +
                           " qubits were selected");
    }
    std::uint64_t mask = 0;
    std::uint64_t pattern = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) {
        const std::size_t q = qubits[k];
        if (q >= s.n_qubits()) {
            throw domain_error("qubit index " + std::to_string(q) + " out of range");
        }
        const std::uint64_t bit = std::uint64_t{1} << q;
        if ((mask & bit) != 0) {
            throw domain_error("qubit index " + std::to_string(q) + " listed twice");
        }
        if (outcome[k] != 0 && outcome[k] != 1) {
            throw domain_error("outcome bits must be 0 or 1");
        }
        mask |= bit;
        if (outcome[k] == 1) {
            pattern |= bit;
        }
    }
    double total = 0.0;
    const auto amps = s.amplitudes();
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        if ((b & mask) == pattern) {
            total += probability(amps[b]);
        }
    }
    return total;
}

[[nodiscard]] inline double marginal_probability(const QuantumState &s,
                                                 std::initializer_list<std::size_t> qubits,
                                                 std::initializer_list<int> outcome) {
    return marginal_probability(s, std::span(qubits.begin(), qubits.size()),
                                std::span(outcome.begin(), outcome.size()));
}

} // namespace sog
