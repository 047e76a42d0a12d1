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
#include <csignal>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sog/server.hpp"
#include "sog/service.hpp"

namespace {

httplib::Server *g_server = nullptr;

void stop_server(int) {
    if (g_server != nullptr) {
        g_server->stop();
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"sog: statevector simulator and state-o-gram renderer"};
    app.require_subcommand(1);

    auto *render = app.add_subcommand("render", "render one SVG per circuit step plus strip.svg");
    std::string render_input;
    std::string out_dir;
    sog::RenderStyle style;
    bool no_vanishing_box = false;
    std::string title;
    render->add_option("file", render_input, "circuit document (.sogc.json, - for stdin)")
        ->required();
    render->add_option("-o,--out", out_dir, "output directory")->required();
    render->add_option("--width", style.width_px, "panel width in px");
    render->add_option("--height", style.height_px, "panel height in px");
    render->add_option("--bar-width", style.bar_width_px, "bar width in px");
    render->add_flag("--no-vanishing-box", no_vanishing_box, "omit the vanishing-state box");
    render->add_option("--title", title, "title drawn above each panel");

    auto *trace = app.add_subcommand("trace", "print the JSON trace of a circuit");
    std::string trace_input;
    trace->add_option("file", trace_input, "circuit document (- for stdin)")->required();

    auto *dj = app.add_subcommand("dj", "print a Deutsch-Jozsa circuit document");
    sog::DjOptions dj_options;
    int constant = 0;
    std::uint64_t mask = 0;
    auto *constant_opt = dj->add_option("--constant", constant, "constant oracle value (0 or 1)");
    auto *balanced_opt =
        dj->add_option("--balanced", mask, "parity mask over the argument qubits");
    constant_opt->excludes(balanced_opt);
    dj->add_flag("--negate", dj_options.negate, "complement the balanced function");
    dj->add_option("--n", dj_options.n_qubits, "total number of qubits")->required();

    auto *serve = app.add_subcommand("serve", "run the HTTP API and web UI");
    int port = 8080;
    std::string host = "127.0.0.1";
    std::string static_dir;
    serve->add_option("--port", port, "listening port")->required();
    serve->add_option("--host", host, "listening address");
    serve->add_option("--static", static_dir, "directory of web UI assets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? sog::kExitOk : sog::kExitUserError;
    }

    if (*render) {
        style.show_vanishing_box = !no_vanishing_box;
        if (!title.empty()) {
            style.title = title;
        }
        return sog::cmd_render(render_input, out_dir, style, std::cerr);
    }
    if (*trace) {
        return sog::cmd_trace(trace_input, std::cout, std::cerr);
    }
    if (*dj) {
        if (*constant_opt) {
            dj_options.constant = constant;
        }
        if (*balanced_opt) {
            dj_options.balanced_mask = mask;
        }
        return sog::cmd_dj(dj_options, std::cout, std::cerr);
    }

    std::optional<std::filesystem::path> assets;
    if (!static_dir.empty()) {
        if (!std::filesystem::is_directory(static_dir)) {
            std::cerr << "sog: i/o error: static directory " << static_dir << " not found\n";
            return sog::kExitEnvironmentError;
        }
        assets = static_dir;
    }
    httplib::Server server;
    sog::install_routes(server, sog::ServiceLimits::from_environment(), assets);
    g_server = &server;
    std::signal(SIGINT, stop_server);
    std::signal(SIGTERM, stop_server);
    if (!server.bind_to_port(host, port)) {
        std::cerr << "sog: i/o error: cannot listen on " << host << ":" << port << "\n";
        return sog::kExitEnvironmentError;
    }
    std::cerr << "sog: listening on http://" << host << ":" << port << "\n";
    server.listen_after_bind();
    return sog::kExitOk;
}
