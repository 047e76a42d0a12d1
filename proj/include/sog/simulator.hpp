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
#include <vector>

#include "sog/circuit.hpp"
#include "sog/layout.hpp"
#include "sog/statevector.hpp"

namespace sog {

/// Snapshot after `column_index` columns have been applied (0 is the
/// initial classical state).
struct TraceStep {
    std::size_t column_index = 0;
    QuantumState state;
    StateogramLayout layout;
};

/// Simulates `c` column by column. The trace has one step per column plus
/// the initial state.
[[nodiscard]] inline std::vector<TraceStep> run_circuit(const Circuit &c) {
    validate(c);
    std::vector<TraceStep> trace;
    trace.reserve(c.columns.size() + 1);

    QuantumState initial = basis_state(c.n_qubits, c.init_index());
    trace.push_back({0, initial, compute_layout(initial)});

    std::vector<Amplitude> amps = std::move(initial).release();
    for (std::size_t col = 0; col < c.columns.size(); ++col) {
        // Targets within a column are disjoint, so gate order is irrelevant.
        for (const Gate &g : c.columns[col]) {
            detail::apply_in_place(amps, g);
        }
        QuantumState state{QuantumState::unchecked, c.n_qubits, amps};
        StateogramLayout layout = compute_layout(state);
        trace.push_back({col + 1, std::move(state), std::move(layout)});
    }
    return trace;
}

} // namespace sog
