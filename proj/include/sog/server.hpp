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

#include <filesystem>
#include <optional>
#include <string>

#include "httplib.h"
#include "sog/service.hpp"

namespace sog {

/// Request bodies above this size are refused with 413 by the transport.
inline constexpr std::size_t kMaxRequestBytes = 32 * 1024 * 1024;

/// Registers the API routes (and the static web UI, when given) on `server`.
/// The handlers keep no state between requests.
inline void install_routes(httplib::Server &server, const ServiceLimits &limits,
                           const std::optional<std::filesystem::path> &static_dir = std::nullopt) {
    const auto reply = [](httplib::Response &res, const ApiResponse &api) {
        res.status = api.status;
        res.set_content(api.body, api.content_type);
    };
    server.set_payload_max_length(kMaxRequestBytes);
    server.Get("/api/health", [reply](const httplib::Request &, httplib::Response &res) {
        reply(res, handle_health());
    });
    server.Post("/api/simulate",
                [reply, limits](const httplib::Request &req, httplib::Response &res) {
                    reply(res, handle_simulate(req.body, limits));
                });
    server.Post("/api/render",
                [reply, limits](const httplib::Request &req, httplib::Response &res) {
                    reply(res, handle_render(req.body, limits));
                });
    if (static_dir) {
        server.set_mount_point("/", static_dir->string());
    }
}

} // namespace sog
