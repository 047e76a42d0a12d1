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
// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <sys/wait.h>

#include "sog/dense_oracle.hpp"
#include "sog/deutsch_jozsa.hpp"
#include "sog/server.hpp"
#include "sog/service.hpp"
#include "support/generators.hpp"
#include "support/svg_audit.hpp"

using namespace sog;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double pi = std::numbers::pi;

/// Collects failure reasons for one criterion.
class Check {
  public:
    void expect(bool ok, const std::string &what) {
        if (!ok && failures_.size() < 5) {
            failures_.push_back(what);
        }
        failed_ = failed_ || !ok;
    }
    [[nodiscard]] bool failed() const { return failed_; }
    [[nodiscard]] std::string summary() const {
        std::string out;
        for (const auto &f : failures_) {
            out += "\n      - " + f;
        }
        return out;
    }

  private:
    bool failed_ = false;
    std::vector<std::string> failures_;
};

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << v;
    return ss.str();
}

// --- criteria ---------------------------------------------------------------

void single_qubit_chart(Check &check, std::string &note) {
    const double r2 = 1 / std::sqrt(2.0);
    (void)compute_layout(QuantumState(1, {{0, r2}, {0, -r2}})); // warm-up
    const auto start = Clock::now();
    const auto layout = compute_layout(QuantumState(1, {{0, r2}, {0, -r2}}));
    const double ms = elapsed_ms(start);
    note = "runtime " + fmt(ms) + " ms";
    check.expect(ms < 1.0, "runtime " + fmt(ms) + " ms >= 1 ms");
    check.expect(layout.bars.size() == 2, "expected exactly two bars");
    if (layout.bars.size() != 2) {
        return;
    }
    const Bar &zero = layout.bars[0], &one = layout.bars[1];
    check.expect(zero.ket_label == "|0⟩" && one.ket_label == "|1⟩", "labels");
    check.expect(std::abs(zero.angle - pi / 2) < 1e-10, "|0> angle");
    check.expect(std::abs(zero.height - 0.5) < 1e-10, "|0> height");
    check.expect(std::abs(zero.y_offset) < 1e-10, "|0> offset");
    check.expect(std::abs(one.angle + pi / 2) < 1e-10, "|1> angle");
    check.expect(std::abs(one.height - 0.5) < 1e-10, "|1> height");
    check.expect(std::abs(one.y_offset - 0.5) < 1e-10, "|1> offset");
}

void eight_term_chart(Check &check, std::string &) {
    const int signs[8] = {+1, -1, -1, +1, +1, -1, -1, +1};
    const double a = 1 / std::sqrt(8.0);
    std::vector<Amplitude> amps;
    for (int s : signs) {
        amps.emplace_back(0, s * a);
    }
    const auto layout = compute_layout(QuantumState(3, amps));
    check.expect(layout.bars.size() == 8, "expected eight bars");
    for (std::size_t k = 0; k < layout.bars.size(); ++k) {
        const Bar &bar = layout.bars[k];
        const std::string who = "bar " + bar.ket_label;
        check.expect(bar.basis_index == k, who + " order");
        check.expect(std::abs(bar.height - 0.125) < 1e-10, who + " height");
        check.expect(std::abs(bar.y_offset - 0.125 * static_cast<double>(k)) < 1e-10, who + " offset");
        check.expect(std::abs(bar.angle - signs[k] * pi / 2) < 1e-10, who + " angle");
    }
}

void hadamard_twice(Check &check, std::string &) {
    const auto trace = run_circuit(Circuit{1, {0}, {{Gate::h(0)}, {Gate::h(0)}}});
    const double r2 = 1 / std::sqrt(2.0);
    const std::vector<std::vector<Amplitude>> expected{{1, 0}, {r2, r2}, {1, 0}};
    check.expect(trace.size() == 3, "expected three steps");
    for (std::size_t k = 0; k < std::min<std::size_t>(3, trace.size()); ++k) {
        for (std::size_t i = 0; i < 2; ++i) {
            check.expect(std::abs(trace[k].state[i] - expected[k][i]) <= 1e-12,
                         "step " + std::to_string(k) + " amplitude " + std::to_string(i));
        }
    }
}

void hadamard_sign_rule(Check &check, std::string &) {
    const double mag = std::pow(2.0, -1.5);
    for (std::uint64_t y = 0; y < 8; ++y) {
        const auto s = hadamard_all(basis_state(3, y));
        for (std::uint64_t x = 0; x < 8; ++x) {
            const bool negative = std::popcount(x & y) % 2 == 1;
            const std::string who = "y=" + std::to_string(y) + " x=" + std::to_string(x);
            check.expect(std::signbit(s[x].real()) == negative, who + " sign");
            check.expect(std::abs(std::abs(s[x]) - mag) <= 1e-12, who + " magnitude");
            check.expect(std::abs(s[x].imag()) <= 1e-12, who + " imaginary part");
        }
    }
}

std::vector<OracleSpec> all_oracles(std::size_t n) {
    std::vector<OracleSpec> out{ConstantOracle{0}, ConstantOracle{1}};
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        out.push_back(BalancedOracle{mask, false});
        out.push_back(BalancedOracle{mask, true});
    }
    return out;
}

std::string oracle_name(const OracleSpec &o) {
    if (const auto *c = std::get_if<ConstantOracle>(&o)) {
        return "constant" + std::to_string(c->value);
    }
    const auto &b = std::get<BalancedOracle>(o);
    return "balanced(mask=" + std::to_string(b.mask) + (b.negate ? ",negate)" : ")");
}

void dj_separation(Check &check, std::string &note) {
    const auto start = Clock::now();
    std::size_t count = 0;
    for (std::size_t n : {3, 4, 5, 6}) {
        std::vector<std::size_t> args;
        for (std::size_t q = 1; q < n; ++q) {
            args.push_back(q);
        }
        const std::vector<int> zeros(args.size(), 0);
        for (const auto &oracle : all_oracles(n)) {
            const auto state = run_circuit(dj_circuit(oracle, n)).back().state;
            const double p = marginal_probability(state, args, zeros);
            const bool constant = std::holds_alternative<ConstantOracle>(oracle);
            check.expect(constant ? std::abs(p - 1) < 1e-10 : p < 1e-10,
                         "n=" + std::to_string(n) + " " + oracle_name(oracle) + " P=" + fmt(p));
            ++count;
        }
    }
    const double ms = elapsed_ms(start);
    check.expect(ms < 100, "runtime " + fmt(ms) + " ms >= 100 ms");
    note = std::to_string(count) + " oracles over n=3..6, " + fmt(ms) + " ms";
}

void destructive_interference(Check &check, std::string &) {
    for (std::size_t n : {3, 4, 5, 6}) {
        for (const auto &oracle : all_oracles(n)) {
            if (std::holds_alternative<ConstantOracle>(oracle)) {
                continue;
            }
            const auto state = run_circuit(dj_circuit(oracle, n)).back().state;
            const std::string who = "n=" + std::to_string(n) + " " + oracle_name(oracle);
            check.expect(std::abs(state[0]) < 1e-10, who + " |0...00>");
            check.expect(std::abs(state[1]) < 1e-10, who + " |0...01>");
        }
    }
}

void oracle_equivalence(Check &check, std::string &note) {
    std::mt19937_64 rng(20250101);
    double worst = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial) % 6;
        const std::size_t depth = std::uniform_int_distribution<std::size_t>(0, 20)(rng);
        const Circuit c = testing::random_circuit(n, depth, rng);
        const auto trace = run_circuit(c);
        const auto dense = gate_matrix_oracle(c);
        check.expect(trace.size() == dense.size(), "step count");
        for (std::size_t k = 0; k < std::min(trace.size(), dense.size()); ++k) {
            worst = std::max(worst, testing::max_abs_diff(trace[k].state, dense[k]));
        }
    }
    check.expect(worst <= 1e-12, "max deviation " + fmt(worst));
    note = "max deviation " + fmt(worst);
}

void property_suites(Check &check, std::string &) {
    std::mt19937_64 rng(8675309);
    // Unitarity per gate kind.
    for (GateKind kind : kAllGateKinds) {
        for (int trial = 0; trial < 1000; ++trial) {
            const auto s = testing::random_state(4, rng);
            const Gate g = testing::random_gate(kind, {0, 1, 2, 3}, rng);
            const double norm = testing::norm_squared(apply_gate(s, g));
            check.expect(std::abs(norm - 1) <= 1e-12,
                         std::string(gate_name(kind)) + " norm " + fmt(norm));
        }
    }
    // Layout completeness and stacking partition.
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial) % 8;
        const auto s = trial % 2 == 0 ? testing::random_state(n, rng) : testing::random_sparse_state(n, rng);
        const auto layout = compute_layout(s);
        check.expect(layout.bars.size() + layout.vanishing.size() == s.dim(), "completeness");
        for (std::size_t k = 0; k + 1 < layout.bars.size(); ++k) {
            check.expect(layout.bars[k + 1].y_offset == layout.bars[k].y_offset + layout.bars[k].height,
                         "stacking partition");
        }
    }
    // Parser round trip.
    for (int trial = 0; trial < 500; ++trial) {
        const Circuit c = testing::random_circuit(1 + static_cast<std::size_t>(trial) % 8, trial % 12, rng);
        check.expect(parse_circuit(serialize_circuit(c)) == c, "round trip");
    }
    // SVG determinism and geometry audit.
    for (int trial = 0; trial < 100; ++trial) {
        const auto layout = compute_layout(testing::random_sparse_state(1 + static_cast<std::size_t>(trial) % 6, rng));
        const std::string svg = render_svg(layout);
        check.expect(svg == render_svg(layout), "svg determinism");
        const auto bars = testing::audit_bars(svg);
        check.expect(bars.size() == layout.bars.size(), "svg bar count");
        for (std::size_t k = 0; k < std::min(bars.size(), layout.bars.size()); ++k) {
            check.expect(std::abs(bars[k].angle - layout.bars[k].angle) < 1e-3 &&
                             std::abs(bars[k].height - layout.bars[k].height) < 1e-3 &&
                             std::abs(bars[k].y_offset - layout.bars[k].y_offset) < 1e-3,
                         "svg geometry audit");
        }
    }
}

std::string run_cli_trace(const fs::path &file, int &status) {
    const std::string command = std::string(SOG_CLI_PATH) + " trace '" + file.string() + "'";
    FILE *pipe = ::popen(command.c_str(), "r");
    std::string out;
    if (pipe == nullptr) {
        status = -1;
        return out;
    }
    std::array<char, 65536> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    const int raw = ::pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

void cli_api_parity(Check &check, std::string &note) {
    std::vector<fs::path> corpus;
    for (const auto &entry : fs::directory_iterator(SOG_CORPUS_DIR)) {
        if (entry.path().string().ends_with(".sogc.json")) {
            corpus.push_back(entry.path());
        }
    }
    std::sort(corpus.begin(), corpus.end());
    check.expect(corpus.size() >= 20, "corpus has only " + std::to_string(corpus.size()) + " circuits");

    httplib::Server server;
    install_routes(server, ServiceLimits{});
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread listener([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);

    std::size_t compared = 0;
    for (const auto &file : corpus) {
        int status = 0;
        const std::string cli = run_cli_trace(file, status);
        std::ifstream in(file, std::ios::binary);
        std::stringstream body;
        body << in.rdbuf();
        const auto api = client.Post("/api/simulate", body.str(), "application/json");
        const std::string name = file.filename().string();
        check.expect(status == 0, name + ": CLI exit " + std::to_string(status));
        check.expect(api && api->status == 200, name + ": API status");
        if (status == 0 && api && api->status == 200) {
            // Both sides re-serialized canonically, then compared byte for byte.
            check.expect(Json::parse(cli).dump() == Json::parse(api->body).dump(), name + ": traces differ");
            check.expect(cli == api->body, name + ": raw bytes differ");
            ++compared;
        }
    }
    server.stop();
    listener.join();
    note = std::to_string(compared) + " corpus circuits";
}

} // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<void(Check &, std::string &)> run;
    };
    const std::vector<Criterion> criteria{
        {"single-qubit chart (i|0> - i|1>)/sqrt2: two bars at ±pi/2, tol 1e-10, < 1 ms", single_qubit_chart},
        {"eight-term 3-qubit chart: heights 0.125, ±pi/2 sign pattern, tol 1e-10", eight_term_chart},
        {"H;H on |0>: |0> -> (|0>+|1>)/sqrt2 -> |0>, tol 1e-12", hadamard_twice},
        {"H on all 8 classical 3-qubit inputs: parity sign rule, tol 1e-12", hadamard_sign_rule},
        {"Deutsch-Jozsa separation: P(args=0) 1 constant / 0 balanced, tol 1e-10, < 100 ms", dj_separation},
        {"destructive interference: balanced oracles leave |0..00>,|0..01> below 1e-10", destructive_interference},
        {"oracle equivalence: 200 random circuits, run_circuit vs dense, tol 1e-12", oracle_equivalence},
        {"property suites: unitarity, layout, round trip, SVG audit", property_suites},
        {"CLI/API parity: sog trace == POST /api/simulate on the corpus", cli_api_parity},
    };
    int failed = 0;
    for (const auto &criterion : criteria) {
        Check check;
        std::string note;
        try {
            criterion.run(check, note);
        } catch (const std::exception &e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (check.failed() ? "[FAIL] " : "[PASS] ") << criterion.name
                  << (note.empty() ? "" : " (" + note + ")") << check.summary() << "\n";
        failed += check.failed() ? 1 : 0;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failed == 0 ? 0 : 1;
}
