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

#include <cstddef>
#include <bit>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sog/circuit.hpp"
#include "sog/errors.hpp"

namespace sog {

/// f(args) = value for every argument.
struct ConstantOracle {
    int value = 0;
};

/// f(args) = parity(args & mask) XOR negate. Mask bit k selects argument
/// qubit k + 1; any nonzero mask gives a balanced function.
struct BalancedOracle {
    std::uint64_t mask = 1;
    bool negate = false;
};

using OracleSpec = std::variant<ConstantOracle, BalancedOracle>;

/// Truth table of the oracle's function over the 2^(n-1) arguments.
[[nodiscard]] inline std::vector<int> oracle_truth_table(const OracleSpec &oracle,
                                                         std::size_t n_qubits) {
    const std::uint64_t n_args = std::uint64_t{1} << (n_qubits - 1);
    std::vector<int> table(n_args);
    for (std::uint64_t a = 0; a < n_args; ++a) {
        if (const auto *c = std::get_if<ConstantOracle>(&oracle)) {
            table[a] = c->value;
        } else {
            const auto &b = std::get<BalancedOracle>(oracle);
            table[a] = (std::popcount(a & b.mask) & 1) ^ (b.negate ? 1 : 0);
        }
    }
    return table;
}

/// Columns implementing |args>|x0> -> |args>|x0 XOR f(args)>. Every gate
/// writes qubit 0, so each occupies its own column.
[[nodiscard]] inline std::vector<Column> dj_oracle(const OracleSpec &oracle,
                                                   std::size_t n_qubits) {
    if (n_qubits < 2) {
        throw domain_error("a Deutsch-Jozsa oracle needs at least 2 qubits");
    }
    std::vector<Column> columns;
    if (const auto *c = std::get_if<ConstantOracle>(&oracle)) {
        if (c->value != 0 && c->value != 1) {
            throw domain_error("constant oracle value must be 0 or 1");
        }
        if (c->value == 1) {
            columns.push_back({Gate::x(0)});
        }
        return columns;
    }
    const auto &b = std::get<BalancedOracle>(oracle);
    if (b.mask == 0) {
        throw domain_error("balanced oracle mask must be nonzero (mask 0 is constant)");
    }
    if (n_qubits - 1 < 64 && (b.mask >> (n_qubits - 1)) != 0) {
        throw domain_error("balanced oracle mask " + std::to_string(b.mask) +
                           " has bits beyond the " + std::to_string(n_qubits - 1) +
                           " argument qubits");
    }
    for (std::size_t q = 1; q < n_qubits; ++q) {
        if (((b.mask >> (q - 1)) & 1U) != 0) {
            columns.push_back({Gate::cnot(q, 0)});
        }
    }
    if (b.negate) {
        columns.push_back({Gate::x(0)});
    }
    return columns;
}

/// Deutsch-Jozsa: start in |0...01>, H on all qubits, the oracle, then H on
/// the argument qubits 1..n-1.
[[nodiscard]] inline Circuit dj_circuit(const OracleSpec &oracle, std::size_t n_qubits) {
    std::vector<Column> oracle_columns = dj_oracle(oracle, n_qubits);
    Circuit c;
    c.n_qubits = n_qubits;
    c.init.assign(n_qubits, 0);
    c.init[0] = 1;

    Column spread;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        spread.push_back(Gate::h(q));
    }
    c.columns.push_back(std::move(spread));
    for (auto &col : oracle_columns) {
        c.columns.push_back(std::move(col));
    }
    Column join;
    for (std::size_t q = 1; q < n_qubits; ++q) {
        join.push_back(Gate::h(q));
    }
    c.columns.push_back(std::move(join));
    return c;
}

} // namespace sog
