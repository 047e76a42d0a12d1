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

// Command implementations behind the `sog` executable and the request
// handlers behind its HTTP service. Everything here is transport-free: the
// commands write to caller-supplied streams and the handlers map a request
// body to a status/content-type/body triple.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sog/circuit.hpp"
#include "sog/deutsch_jozsa.hpp"
#include "sog/errors.hpp"
#include "sog/format.hpp"
#include "sog/json_io.hpp"
#include "sog/simulator.hpp"
#include "sog/svg.hpp"

namespace sog {

enum ExitCode : int { kExitOk = 0, kExitUserError = 2, kExitEnvironmentError = 3 };

/// Could not read or write a file.
class io_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One-line diagnostic shared by the CLI (standard error) and the API
/// (400 body).
[[nodiscard]] inline std::string describe_error(const std::exception &e) {
    if (dynamic_cast<const parse_error *>(&e) != nullptr) {
        return std::string("parse error: ") + e.what();
    }
    if (dynamic_cast<const validation_error *>(&e) != nullptr) {
        return std::string("validation error: ") + e.what();
    }
    if (dynamic_cast<const io_error *>(&e) != nullptr) {
        return std::string("i/o error: ") + e.what();
    }
    return std::string("error: ") + e.what();
}

/// Whole file, or standard input for "-".
[[nodiscard]] inline std::string read_input(const std::string &path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in || std::filesystem::is_directory(path)) {
        throw io_error("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Step file name: step-000.svg, step-001.svg, ...
[[nodiscard]] inline std::string step_file_name(std::size_t step) {
    std::string digits = std::to_string(step);
    if (digits.size() < 3) {
        digits.insert(0, 3 - digits.size(), '0');
    }
    return "step-" + digits + ".svg";
}

namespace detail {

/// Runs `body`, mapping library errors to the exit-code contract.
template <class Body>
int run_command(std::ostream &err, Body &&body) {
    try {
        return body();
    } catch (const io_error &e) {
        err << "sog: " << describe_error(e) << "\n";
        return kExitEnvironmentError;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "sog: i/o error: " << e.what() << "\n";
        return kExitEnvironmentError;
    } catch (const std::bad_alloc &) {
        err << "sog: out of memory\n";
        return kExitEnvironmentError;
    } catch (const std::exception &e) {
        err << "sog: " << describe_error(e) << "\n";
        return kExitUserError;
    }
}

inline void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) {
        throw io_error("cannot write " + path.string());
    }
}

} // namespace detail

/// Writes step-NNN.svg for every trace step plus strip.svg into `out_dir`.
/// Nothing is written unless the circuit parses and every image renders.
inline int cmd_render(const std::string &circuit_path, const std::filesystem::path &out_dir,
                      const RenderStyle &style, std::ostream &err) {
    return detail::run_command(err, [&] {
        const Circuit circuit = parse_circuit(read_input(circuit_path));
        const std::vector<TraceStep> trace = run_circuit(circuit);

        std::vector<std::pair<std::string, std::string>> files;
        std::vector<StateogramLayout> layouts;
        for (const TraceStep &step : trace) {
            files.emplace_back(step_file_name(step.column_index), render_svg(step.layout, style));
            layouts.push_back(step.layout);
        }
        files.emplace_back("strip.svg", render_strip(layouts, style));

        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec) {
            throw io_error("cannot create " + out_dir.string() + ": " + ec.message());
        }
        for (const auto &[name, content] : files) {
            detail::write_file(out_dir / name, content);
        }
        return static_cast<int>(kExitOk);
    });
}

/// Canonical trace document of the circuit, newline-terminated.
inline int cmd_trace(const std::string &circuit_path, std::ostream &out, std::ostream &err) {
    return detail::run_command(err, [&] {
        const Circuit circuit = parse_circuit(read_input(circuit_path));
        out << serialize_trace(circuit) << "\n";
        return static_cast<int>(kExitOk);
    });
}

struct DjOptions {
    std::optional<int> constant;
    std::optional<std::uint64_t> balanced_mask;
    bool negate = false;
    std::size_t n_qubits = 3;
};

/// Deutsch-Jozsa circuit document for the selected oracle, newline-terminated.
inline int cmd_dj(const DjOptions &options, std::ostream &out, std::ostream &err) {
    return detail::run_command(err, [&] {
        if (options.constant.has_value() == options.balanced_mask.has_value()) {
            throw domain_error("choose exactly one of --constant and --balanced");
        }
        if (options.constant && options.negate) {
            throw domain_error("--negate only applies to --balanced");
        }
        OracleSpec oracle = options.constant
                                ? OracleSpec{ConstantOracle{*options.constant}}
                                : OracleSpec{BalancedOracle{*options.balanced_mask, options.negate}};
        out << serialize_circuit(dj_circuit(oracle, options.n_qubits)) << "\n";
        return static_cast<int>(kExitOk);
    });
}

// ---------------------------------------------------------------------------
// HTTP handlers

struct ServiceLimits {
    std::size_t max_qubits = 12;
    std::size_t max_columns = 256;

    /// Defaults, with SOG_MAX_QUBITS overriding the qubit cap.
    static ServiceLimits from_environment() {
        ServiceLimits limits;
        if (const char *value = std::getenv("SOG_MAX_QUBITS")) {
            try {
                const unsigned long parsed = std::stoul(value);
                limits.max_qubits = std::min<std::size_t>(parsed, kMaxQubits);
            } catch (const std::exception &) {
                std::cerr << "sog: ignoring invalid SOG_MAX_QUBITS=" << value << "\n";
            }
        }
        return limits;
    }
};

struct ApiResponse {
    int status = 200;
    std::string content_type = "text/plain";
    std::string body;
};

namespace detail {

inline ApiResponse error_response(int status, const std::exception &e) {
    Json body;
    body["error"] = describe_error(e);
    if (const auto *pe = dynamic_cast<const parse_error *>(&e)) {
        body["kind"] = "parse";
        body["line"] = pe->line();
        body["column"] = pe->column();
    } else if (const auto *ve = dynamic_cast<const validation_error *>(&e)) {
        body["kind"] = "validation";
        if (ve->column()) {
            body["circuit_column"] = *ve->column();
        }
        if (ve->qubit()) {
            body["qubit"] = *ve->qubit();
        }
    } else if (dynamic_cast<const resource_error *>(&e) != nullptr) {
        body["kind"] = "too_large";
    } else {
        body["kind"] = "invalid";
    }
    return {status, "application/json", body.dump() + "\n"};
}

inline void check_limits(const Circuit &c, const ServiceLimits &limits) {
    if (c.n_qubits > limits.max_qubits) {
        throw resource_error("circuit has " + std::to_string(c.n_qubits) +
                             " qubits; the service accepts at most " +
                             std::to_string(limits.max_qubits));
    }
    if (c.columns.size() > limits.max_columns) {
        throw resource_error("circuit has " + std::to_string(c.columns.size()) +
                             " columns; the service accepts at most " +
                             std::to_string(limits.max_columns));
    }
}

template <class Body>
ApiResponse run_handler(Body &&body) {
    try {
        return body();
    } catch (const resource_error &e) {
        return error_response(413, e);
    } catch (const std::bad_alloc &e) {
        return error_response(413, e);
    } catch (const std::exception &e) {
        return error_response(400, e);
    }
}

inline RenderStyle style_from_json(const PositionedJson &doc, const std::string &pointer) {
    RenderStyle style;
    const Json &j = doc.value.at(Json::json_pointer(pointer));
    const auto fail = [&](const std::string &where, const std::string &message) {
        throw make_parse_error(doc.text, doc.offset_of(where), message);
    };
    if (!j.is_object()) {
        fail(pointer, "\"style\" must be an object");
    }
    for (const auto &[key, value] : j.items()) {
        const std::string where = pointer + "/" + escape_pointer_token(key);
        double *target = key == "width"       ? &style.width_px
                         : key == "height"    ? &style.height_px
                         : key == "bar_width" ? &style.bar_width_px
                         : key == "margin"    ? &style.margin_px
                         : key == "font_size" ? &style.font_size_px
                                              : nullptr;
        if (target != nullptr) {
            if (!value.is_number()) {
                fail(where, "\"" + key + "\" must be a number");
            }
            *target = value.get<double>();
        } else if (key == "show_vanishing_box") {
            if (!value.is_boolean()) {
                fail(where, "\"show_vanishing_box\" must be a boolean");
            }
            style.show_vanishing_box = value.get<bool>();
        } else if (key == "title") {
            if (!value.is_string()) {
                fail(where, "\"title\" must be a string");
            }
            style.title = value.get<std::string>();
        } else {
            fail(where, "unknown style key \"" + key + "\"");
        }
    }
    svg::check_style(style);
    return style;
}

} // namespace detail

inline ApiResponse handle_health() { return {200, "text/plain", "ok"}; }

/// POST /api/simulate: circuit document in, trace document out.
inline ApiResponse handle_simulate(std::string body, const ServiceLimits &limits) {
    return detail::run_handler([&] {
        const Circuit circuit = parse_circuit(std::move(body));
        detail::check_limits(circuit, limits);
        return ApiResponse{200, "application/json", serialize_trace(circuit) + "\n"};
    });
}

/// POST /api/render: {"circuit": <document>, "step": int, "style": {...}?}
/// in, SVG of that step out.
inline ApiResponse handle_render(std::string body, const ServiceLimits &limits) {
    return detail::run_handler([&] {
        const PositionedJson doc = parse_json(std::move(body));
        const auto fail = [&](const std::string &where, const std::string &message) {
            throw detail::make_parse_error(doc.text, doc.offset_of(where), message);
        };
        if (!doc.value.is_object()) {
            fail("", "render request must be an object");
        }
        for (const auto &[key, value] : doc.value.items()) {
            if (key != "circuit" && key != "step" && key != "style") {
                fail("/" + detail::escape_pointer_token(key), "unknown key \"" + key + "\"");
            }
        }
        if (!doc.value.contains("circuit")) {
            fail("", "missing key \"circuit\"");
        }
        const Circuit circuit = circuit_from_json(doc, "/circuit");
        detail::check_limits(circuit, limits);

        std::size_t step = 0;
        if (doc.value.contains("step")) {
            const Json &s = doc.value["step"];
            if (!s.is_number_unsigned() || s.get<std::uint64_t>() > circuit.columns.size()) {
                fail("/step", "\"step\" must be an integer in [0, " +
                                  std::to_string(circuit.columns.size()) + "]");
            }
            step = s.get<std::size_t>();
        }
        const RenderStyle style =
            doc.value.contains("style") ? detail::style_from_json(doc, "/style") : RenderStyle{};

        // Only the requested prefix of the circuit needs simulating.
        Circuit prefix = circuit;
        prefix.columns.resize(step);
        const std::vector<TraceStep> trace = run_circuit(prefix);
        return ApiResponse{200, "image/svg+xml", render_svg(trace.back().layout, style)};
    });
}

} // namespace sog
