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

// Brute-force reference simulator. Every column is assembled as an explicit
// 2^n x 2^n unitary from Kronecker products of 2x2 factors and applied by a
// dense matrix-vector product. It shares no code path with run_circuit and
// exists to check it.

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "sog/circuit.hpp"
#include "sog/errors.hpp"
#include "sog/statevector.hpp"

namespace sog {

inline constexpr std::size_t kDenseOracleMaxQubits = 10;

namespace dense {

using Factor = std::array<Amplitude, 4>; // row-major 2x2

/// Square complex matrix, row-major.
class Matrix {
  public:
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static Matrix from_factor(const Factor &f) {
        Matrix m(2);
        for (std::size_t k = 0; k < 4; ++k) {
            m.data_[k] = f[k];
        }
        return m;
    }

    [[nodiscard]] std::size_t dim() const { return dim_; }
    Amplitude &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    Amplitude operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

    /// this ⊗ rhs
    [[nodiscard]] Matrix kron(const Matrix &rhs) const {
        Matrix out(dim_ * rhs.dim_);
        for (std::size_t r1 = 0; r1 < dim_; ++r1) {
            for (std::size_t c1 = 0; c1 < dim_; ++c1) {
                const Amplitude a = (*this)(r1, c1);
                for (std::size_t r2 = 0; r2 < rhs.dim_; ++r2) {
                    for (std::size_t c2 = 0; c2 < rhs.dim_; ++c2) {
                        out(r1 * rhs.dim_ + r2, c1 * rhs.dim_ + c2) = a * rhs(r2, c2);
                    }
                }
            }
        }
        return out;
    }

    void add_scaled(const Matrix &rhs, Amplitude scale) {
        for (std::size_t k = 0; k < data_.size(); ++k) {
            data_[k] += scale * rhs.data_[k];
        }
    }

    [[nodiscard]] std::vector<Amplitude> apply(const std::vector<Amplitude> &v) const {
        std::vector<Amplitude> out(dim_);
        for (std::size_t r = 0; r < dim_; ++r) {
            Amplitude acc{};
            for (std::size_t c = 0; c < dim_; ++c) {
                acc += (*this)(r, c) * v[c];
            }
            out[r] = acc;
        }
        return out;
    }

  private:
    std::size_t dim_;
    std::vector<Amplitude> data_;
};

/// coefficient × (⊗ factors), identity on qubits absent from the map.
struct Term {
    Amplitude coefficient{1.0, 0.0};
    std::map<std::size_t, Factor> factors;
};

inline const Factor kIdentity{1, 0, 0, 1};
inline const Factor kPauliX{0, 1, 1, 0};
inline const Factor kPauliY{0, Amplitude{0, -1}, Amplitude{0, 1}, 0};
inline const Factor kPauliZ{1, 0, 0, -1};
inline const Factor kProjector0{1, 0, 0, 0};
inline const Factor kProjector1{0, 0, 0, 1};

inline Factor diagonal(Amplitude lower) { return {1, 0, 0, lower}; }

/// The gate's unitary written as a sum of Kronecker-product terms.
inline std::vector<Term> decompose(const Gate &g) {
    const auto &t = g.targets;
    const double half_pi = std::numbers::pi / 2.0;
    const double quarter_pi = std::numbers::pi / 4.0;
    switch (g.kind) {
    case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        return {{1.0, {{t[0], Factor{r, r, r, -r}}}}};
    }
    case GateKind::X: return {{1.0, {{t[0], kPauliX}}}};
    case GateKind::Y: return {{1.0, {{t[0], kPauliY}}}};
    case GateKind::Z: return {{1.0, {{t[0], kPauliZ}}}};
    case GateKind::S: return {{1.0, {{t[0], diagonal(std::polar(1.0, half_pi))}}}};
    case GateKind::Sdg: return {{1.0, {{t[0], diagonal(std::polar(1.0, -half_pi))}}}};
    case GateKind::T: return {{1.0, {{t[0], diagonal(std::polar(1.0, quarter_pi))}}}};
    case GateKind::Tdg: return {{1.0, {{t[0], diagonal(std::polar(1.0, -quarter_pi))}}}};
    case GateKind::Phase: return {{1.0, {{t[0], diagonal(std::polar(1.0, g.theta))}}}};
    case GateKind::CNOT:
        return {{1.0, {{t[0], kProjector0}}}, {1.0, {{t[0], kProjector1}, {t[1], kPauliX}}}};
    case GateKind::CZ:
        return {{1.0, {{t[0], kProjector0}}}, {1.0, {{t[0], kProjector1}, {t[1], kPauliZ}}}};
    case GateKind::SWAP:
        return {{0.5, {}},
                {0.5, {{t[0], kPauliX}, {t[1], kPauliX}}},
                {0.5, {{t[0], kPauliY}, {t[1], kPauliY}}},
                {0.5, {{t[0], kPauliZ}, {t[1], kPauliZ}}}};
    case GateKind::CCNOT:
        return {{1.0, {}},
                {-1.0, {{t[0], kProjector1}, {t[1], kProjector1}}},
                {1.0, {{t[0], kProjector1}, {t[1], kProjector1}, {t[2], kPauliX}}}};
    }
    return {};
}

/// Full matrix of one term; qubit n-1 is the leftmost factor.
inline Matrix expand(const Term &term, std::size_t n_qubits) {
    Matrix m = Matrix::from_factor(term.factors.contains(n_qubits - 1)
                                       ? term.factors.at(n_qubits - 1)
                                       : kIdentity);
    for (std::size_t q = n_qubits - 1; q-- > 0;) {
        const auto it = term.factors.find(q);
        m = m.kron(Matrix::from_factor(it == term.factors.end() ? kIdentity : it->second));
    }
    return m;
}

/// Unitary of a whole column. Gates have disjoint supports, so the product
/// of their term sums expands to a sum of single Kronecker products.
inline Matrix column_unitary(const Column &column, std::size_t n_qubits) {
    std::vector<Term> combined{Term{}};
    for (const Gate &g : column) {
        std::vector<Term> next;
        for (const Term &lhs : combined) {
            for (const Term &rhs : decompose(g)) {
                Term merged = lhs;
                merged.coefficient *= rhs.coefficient;
                merged.factors.insert(rhs.factors.begin(), rhs.factors.end());
                next.push_back(std::move(merged));
            }
        }
        combined = std::move(next);
    }
    Matrix u(std::size_t{1} << n_qubits);
    for (const Term &term : combined) {
        u.add_scaled(expand(term, n_qubits), term.coefficient);
    }
    return u;
}

} // namespace dense

/// Per-step states of `c` computed through dense column unitaries.
[[nodiscard]] inline std::vector<QuantumState> gate_matrix_oracle(const Circuit &c) {
    if (c.n_qubits > kDenseOracleMaxQubits) {
        throw resource_error("dense oracle is limited to " +
                             std::to_string(kDenseOracleMaxQubits) + " qubits, circuit has " +
                             std::to_string(c.n_qubits));
    }
    validate(c);
    std::vector<QuantumState> states;
    states.reserve(c.columns.size() + 1);
    states.push_back(basis_state(c.n_qubits, c.init_index()));
    std::vector<Amplitude> v(states.back().amplitudes().begin(),
                             states.back().amplitudes().end());
    for (const Column &column : c.columns) {
        v = dense::column_unitary(column, c.n_qubits).apply(v);
        states.emplace_back(QuantumState::unchecked, c.n_qubits, v);
    }
    return states;
}

} // namespace sog
