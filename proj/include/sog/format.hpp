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

// Reader and writer for the `.sogc.json` circuit document:
//
//   {"version":"1","qubits":<int>,"init":[<bit>...],
//    "columns":[[{"gate":<name>,"targets":[<int>...],"theta":<radians>?}...]...]}
//
// The dialect is strict JSON: unknown keys and duplicate keys are errors.
// Gate names are matched case-insensitively and written upper-case; theta
// is present exactly for PHASE.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "sog/circuit.hpp"
#include "sog/errors.hpp"

namespace sog {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatVersion = "1";

/// A parsed JSON document plus the input offset at which each value (keyed
/// by JSON pointer) was read, so schema errors can point back into the text.
struct PositionedJson {
    std::string text;
    Json value;
    std::unordered_map<std::string, std::size_t> offsets;

    [[nodiscard]] std::size_t offset_of(const std::string &pointer) const {
        const auto it = offsets.find(pointer);
        return it == offsets.end() ? 0 : it->second;
    }
};

namespace detail {

/// 1-based line and UTF-8 character column of the byte just before `offset`.
inline std::pair<std::size_t, std::size_t> line_and_column(std::string_view text,
                                                           std::size_t offset) {
    offset = std::min(offset, text.size());
    const std::size_t at = offset == 0 ? 0 : offset - 1;
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < at && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            line_start = i + 1;
        }
    }
    std::size_t column = 1;
    for (std::size_t i = line_start; i < at && i < text.size(); ++i) {
        if ((static_cast<unsigned char>(text[i]) & 0xC0U) != 0x80U) {
            ++column;
        }
    }
    return {line, column};
}

inline parse_error make_parse_error(std::string_view text, std::size_t offset,
                                    const std::string &message) {
    const auto [line, column] = line_and_column(text, offset);
    return parse_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message,
                       line, column);
}

inline std::string escape_pointer_token(std::string_view key) {
    std::string out;
    for (char c : key) {
        if (c == '~') {
            out += "~0";
        } else if (c == '/') {
            out += "~1";
        } else {
            out += c;
        }
    }
    return out;
}

/// SAX consumer building an ordered DOM, recording value offsets and
/// rejecting duplicate object keys.
class PositionedBuilder {
  public:
    using number_integer_t = Json::number_integer_t;
    using number_unsigned_t = Json::number_unsigned_t;
    using number_float_t = Json::number_float_t;
    using string_t = Json::string_t;
    using binary_t = Json::binary_t;

    PositionedBuilder(PositionedJson &out, std::stringbuf &buf) : out_(out), buf_(buf) {}

    bool null() { return add(Json(nullptr)); }
    bool boolean(bool v) { return add(Json(v)); }
    bool number_integer(number_integer_t v) { return add(Json(v)); }
    bool number_unsigned(number_unsigned_t v) { return add(Json(v)); }
    bool number_float(number_float_t v, const string_t &) { return add(Json(v)); }
    bool string(string_t &v) { return add(Json(std::move(v))); }
    bool binary(binary_t &v) { return add(Json::binary(std::move(v))); }

    bool start_object(std::size_t) { return open(Json::object()); }
    bool start_array(std::size_t) { return open(Json::array()); }
    bool end_object() { return close(); }
    bool end_array() { return close(); }

    bool key(string_t &k) {
        Frame &top = frames_.back();
        if (!top.keys.insert(k).second) {
            error_offset_ = offset();
            error_message_ = "duplicate key \"" + k + "\"";
            return false;
        }
        top.pending_key = k;
        return true;
    }

    template <class Exception>
    bool parse_error(std::size_t position, const std::string &, const Exception &ex) {
        error_offset_ = position;
        std::string what = ex.what();
        // Drop nlohmann's "[json.exception...] parse error at line L, column C: ".
        const auto colon = what.find(": ");
        error_message_ = colon == std::string::npos ? what : what.substr(colon + 2);
        return false;
    }

    [[nodiscard]] std::size_t error_offset() const { return error_offset_; }
    [[nodiscard]] const std::string &error_message() const { return error_message_; }

  private:
    struct Frame {
        Json *node;
        std::string pointer;
        std::size_t next_index = 0;
        std::string pending_key;
        std::set<std::string> keys;
    };

    std::size_t offset() {
        return static_cast<std::size_t>(buf_.pubseekoff(0, std::ios_base::cur, std::ios_base::in));
    }

    std::pair<Json *, std::string> insert(Json value) {
        if (frames_.empty()) {
            out_.value = std::move(value);
            return {&out_.value, ""};
        }
        Frame &top = frames_.back();
        if (top.node->is_array()) {
            std::string pointer = top.pointer + "/" + std::to_string(top.next_index++);
            top.node->push_back(std::move(value));
            return {&top.node->back(), std::move(pointer)};
        }
        std::string pointer = top.pointer + "/" + escape_pointer_token(top.pending_key);
        Json &slot = (*top.node)[top.pending_key];
        slot = std::move(value);
        return {&slot, std::move(pointer)};
    }

    bool add(Json value) {
        auto [node, pointer] = insert(std::move(value));
        out_.offsets[pointer] = offset();
        return true;
    }

    bool open(Json container) {
        auto [node, pointer] = insert(std::move(container));
        out_.offsets[pointer] = offset();
        frames_.push_back(Frame{node, std::move(pointer), 0, {}, {}});
        return true;
    }

    bool close() {
        frames_.pop_back();
        return true;
    }

    PositionedJson &out_;
    std::stringbuf &buf_;
    std::vector<Frame> frames_;
    std::size_t error_offset_ = 0;
    std::string error_message_;
};

} // namespace detail

/// Strict JSON parse; throws parse_error with the failing position.
[[nodiscard]] inline PositionedJson parse_json(std::string text) {
    PositionedJson out;
    out.text = std::move(text);
    std::stringbuf buf(out.text, std::ios_base::in);
    std::istream stream(&buf);
    detail::PositionedBuilder builder(out, buf);
    if (!Json::sax_parse(stream, &builder, Json::input_format_t::json, true)) {
        throw detail::make_parse_error(out.text, builder.error_offset(), builder.error_message());
    }
    return out;
}

namespace detail {

class CircuitReader {
  public:
    explicit CircuitReader(const PositionedJson &doc) : doc_(doc) {}

    Circuit read(const std::string &pointer) {
        const Json &root = at(pointer);
        expect_keys(root, pointer, {"version", "qubits", "init", "columns"});

        const Json &version = member(root, pointer, "version");
        if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
            fail(pointer + "/version",
                 "unsupported version (expected \"" + std::string(kFormatVersion) + "\")");
        }

        Circuit c;
        c.n_qubits = read_index(member(root, pointer, "qubits"), pointer + "/qubits", "qubits");

        const std::string init_ptr = pointer + "/init";
        const Json &init = member(root, pointer, "init");
        if (!init.is_array()) {
            fail(init_ptr, "\"init\" must be an array of bits");
        }
        for (std::size_t q = 0; q < init.size(); ++q) {
            const std::string bit_ptr = init_ptr + "/" + std::to_string(q);
            if (!init[q].is_number_integer()) {
                fail(bit_ptr, "init bits must be integers");
            }
            const auto bit = init[q].get<std::int64_t>();
            c.init.push_back(bit == 0 || bit == 1 ? static_cast<int>(bit) : 2);
        }

        const std::string columns_ptr = pointer + "/columns";
        const Json &columns = member(root, pointer, "columns");
        if (!columns.is_array()) {
            fail(columns_ptr, "\"columns\" must be an array of columns");
        }
        for (std::size_t col = 0; col < columns.size(); ++col) {
            const std::string col_ptr = columns_ptr + "/" + std::to_string(col);
            if (!columns[col].is_array()) {
                fail(col_ptr, "column " + std::to_string(col) + " must be an array of gates");
            }
            Column column;
            for (std::size_t k = 0; k < columns[col].size(); ++k) {
                column.push_back(read_gate(columns[col][k], col_ptr + "/" + std::to_string(k)));
            }
            c.columns.push_back(std::move(column));
        }
        validate(c);
        return c;
    }

  private:
    [[noreturn]] void fail(const std::string &pointer, const std::string &message) const {
        throw make_parse_error(doc_.text, doc_.offset_of(pointer), message);
    }

    const Json &at(const std::string &pointer) const {
        const Json::json_pointer ptr(pointer);
        if (!doc_.value.contains(ptr)) {
            fail(pointer, "missing circuit document");
        }
        const Json &node = doc_.value.at(ptr);
        if (!node.is_object()) {
            fail(pointer, "circuit document must be an object");
        }
        return node;
    }

    const Json &member(const Json &object, const std::string &pointer,
                       const std::string &key) const {
        const auto it = object.find(key);
        if (it == object.end()) {
            fail(pointer, "missing key \"" + key + "\"");
        }
        return *it;
    }

    void expect_keys(const Json &object, const std::string &pointer,
                     std::initializer_list<std::string_view> allowed) const {
        for (const auto &[key, value] : object.items()) {
            bool known = false;
            for (std::string_view a : allowed) {
                known = known || key == a;
            }
            if (!known) {
                fail(pointer + "/" + escape_pointer_token(key), "unknown key \"" + key + "\"");
            }
        }
    }

    std::size_t read_index(const Json &value, const std::string &pointer,
                           const std::string &what) const {
        if (!value.is_number_unsigned()) {
            fail(pointer, "\"" + what + "\" must be a non-negative integer");
        }
        const auto v = value.get<std::uint64_t>();
        if (v > std::numeric_limits<std::uint32_t>::max()) {
            fail(pointer, "\"" + what + "\" is too large");
        }
        return static_cast<std::size_t>(v);
    }

    Gate read_gate(const Json &record, const std::string &pointer) const {
        if (!record.is_object()) {
            fail(pointer, "gate record must be an object");
        }
        expect_keys(record, pointer, {"gate", "targets", "theta"});
        const Json &name = member(record, pointer, "gate");
        if (!name.is_string()) {
            fail(pointer + "/gate", "\"gate\" must be a string");
        }
        const auto kind = gate_kind_from_name(name.get<std::string>());
        if (!kind) {
            fail(pointer + "/gate", "unknown gate \"" + name.get<std::string>() + "\"");
        }
        Gate g;
        g.kind = *kind;

        const Json &targets = member(record, pointer, "targets");
        if (!targets.is_array()) {
            fail(pointer + "/targets", "\"targets\" must be an array of qubit indices");
        }
        for (std::size_t i = 0; i < targets.size(); ++i) {
            g.targets.push_back(
                read_index(targets[i], pointer + "/targets/" + std::to_string(i), "targets"));
        }

        const auto theta = record.find("theta");
        if (g.kind == GateKind::Phase) {
            if (theta == record.end()) {
                fail(pointer, "PHASE requires \"theta\"");
            }
            if (!theta->is_number() || !std::isfinite(theta->get<double>())) {
                fail(pointer + "/theta", "\"theta\" must be a finite number");
            }
            g.theta = theta->get<double>();
        } else if (theta != record.end()) {
            fail(pointer + "/theta", "\"theta\" is only allowed on PHASE");
        }
        return g;
    }

    const PositionedJson &doc_;
};

} // namespace detail

/// Reads the circuit stored at `pointer` inside an already parsed document.
[[nodiscard]] inline Circuit circuit_from_json(const PositionedJson &doc,
                                               const std::string &pointer = "") {
    return detail::CircuitReader(doc).read(pointer);
}

/// Parses and validates a circuit document. Throws parse_error for
/// malformed text or schema violations and validation_error for circuit
/// invariant violations.
[[nodiscard]] inline Circuit parse_circuit(std::string text) {
    return circuit_from_json(parse_json(std::move(text)));
}

[[nodiscard]] inline Json circuit_to_json(const Circuit &c) {
    Json columns = Json::array();
    for (const Column &column : c.columns) {
        Json gates = Json::array();
        for (const Gate &g : column) {
            Json record;
            record["gate"] = gate_name(g.kind);
            record["targets"] = g.targets;
            if (g.kind == GateKind::Phase) {
                record["theta"] = g.theta;
            }
            gates.push_back(std::move(record));
        }
        columns.push_back(std::move(gates));
    }
    Json doc;
    doc["version"] = kFormatVersion;
    doc["qubits"] = c.n_qubits;
    doc["init"] = c.init;
    doc["columns"] = std::move(columns);
    return doc;
}

/// Canonical compact form: fixed key order, no whitespace.
[[nodiscard]] inline std::string serialize_circuit(const Circuit &c) {
    return circuit_to_json(c).dump();
}

} // namespace sog
