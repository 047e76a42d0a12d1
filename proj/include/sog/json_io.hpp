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

// JSON forms shared by the trace output and the HTTP API:
//   state:  {"n":int,"amps":[[re,im],...]}
//   layout: {"n":int,"bars":[{"b","label","angle","h","y","rgb"}],"vanishing":[str]}
//   trace:  {"circuit":<circuit document>,"steps":[{"column_index","state","layout"}]}

#include <cstddef>
#include <string>
#include <vector>

#include "sog/errors.hpp"
#include "sog/format.hpp"
#include "sog/layout.hpp"
#include "sog/simulator.hpp"
#include "sog/statevector.hpp"

namespace sog {

[[nodiscard]] inline Json state_to_json(const QuantumState &s) {
    Json amps = Json::array();
    for (const Amplitude &a : s.amplitudes()) {
        amps.push_back(Json::array({a.real(), a.imag()}));
    }
    Json out;
    out["n"] = s.n_qubits();
    out["amps"] = std::move(amps);
    return out;
}

/// Inverse of state_to_json; the amplitudes must be normalized.
[[nodiscard]] inline QuantumState state_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("amps") ||
        !j["n"].is_number_unsigned() || !j["amps"].is_array()) {
        throw domain_error("state JSON must be {\"n\": int, \"amps\": [[re, im], ...]}");
    }
    std::vector<Amplitude> amps;
    amps.reserve(j["amps"].size());
    for (const Json &pair : j["amps"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
            !pair[1].is_number()) {
            throw domain_error("each amplitude must be a [re, im] pair");
        }
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return {j["n"].get<std::size_t>(), std::move(amps)};
}

[[nodiscard]] inline Json layout_to_json(const StateogramLayout &layout) {
    Json bars = Json::array();
    for (const Bar &bar : layout.bars) {
        Json b;
        b["b"] = bar.basis_index;
        b["label"] = bar.ket_label;
        b["angle"] = bar.angle;
        b["h"] = bar.height;
        b["y"] = bar.y_offset;
        b["rgb"] = Json::array({bar.color.r, bar.color.g, bar.color.b});
        bars.push_back(std::move(b));
    }
    Json out;
    out["n"] = layout.n_qubits;
    out["bars"] = std::move(bars);
    out["vanishing"] = layout.vanishing;
    return out;
}

[[nodiscard]] inline Json trace_to_json(const Circuit &c, const std::vector<TraceStep> &steps) {
    Json out;
    out["circuit"] = circuit_to_json(c);
    Json js = Json::array();
    for (const TraceStep &step : steps) {
        Json s;
        s["column_index"] = step.column_index;
        s["state"] = state_to_json(step.state);
        s["layout"] = layout_to_json(step.layout);
        js.push_back(std::move(s));
    }
    out["steps"] = std::move(js);
    return out;
}

/// Canonical compact trace document for `c`.
[[nodiscard]] inline std::string serialize_trace(const Circuit &c) {
    return trace_to_json(c, run_circuit(c)).dump();
}

} // namespace sog
