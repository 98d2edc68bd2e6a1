// Copyright 2026 The shadowprint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shadowprint/bridge.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <memory>
#include <optional>
#include <thread>

#include "shadowprint/error.hpp"

namespace shadowprint {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

BridgeClient::BridgeClient(const std::string& command, std::chrono::milliseconds timeout)
    : command_(command), timeout_(timeout) {
    int fds[2];
    // A socket pair rather than pipes so writes to a dead adapter can use
    // MSG_NOSIGNAL instead of raising SIGPIPE in the host process.
    if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
        throw BackendError("cannot create bridge channel: " + std::string(std::strerror(errno)));
    }
    const pid_t pid = ::fork();
    if (pid < 0) {
        ::close(fds[0]);
        ::close(fds[1]);
        throw BackendError("cannot fork adapter process: " + std::string(std::strerror(errno)));
    }
    if (pid == 0) {
        // Own process group, so a kill reaches the adapter and not just the shell.
        ::setpgid(0, 0);
        ::dup2(fds[1], STDIN_FILENO);
        ::dup2(fds[1], STDOUT_FILENO);
        ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }
    ::setpgid(pid, pid);
    ::close(fds[1]);
    fd_ = fds[0];
    pid_ = pid;
}

BridgeClient::~BridgeClient() {
    if (running()) {
        timeout_ = std::min(timeout_, std::chrono::milliseconds(1000));
        try {
            shutdown();
        } catch (...) {
            // Already reaped by fail().
        }
    }
    if (fd_ >= 0) {
        ::close(fd_);
    }
}

int BridgeClient::reap(bool force) {
    if (pid_ <= 0) {
        return -1;
    }
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
    int status = 0;
    if (!force) {
        const auto deadline = Clock::now() + timeout_;
        while (Clock::now() < deadline) {
            const pid_t r = ::waitpid(pid_, &status, WNOHANG);
            if (r == pid_) {
                pid_ = -1;
                return WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
            }
            std::this_thread::sleep_for(std::chrono::milliseconds(2));
        }
    }
    ::kill(-pid_, SIGKILL);
    ::kill(pid_, SIGKILL);
    ::waitpid(pid_, &status, 0);
    pid_ = -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
}

void BridgeClient::fail(const std::string& what) {
    reap(true);
    throw BackendError("adapter '" + command_ + "': " + what);
}

void BridgeClient::write_line(const std::string& line) {
    std::string data = line;
    data.push_back('\n');
    std::size_t sent = 0;
    while (sent < data.size()) {
        const ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            const std::string reason = std::strerror(errno);
            const int status = reap(false);
            throw BackendError("adapter '" + command_ + "': write failed (" + reason + "), exit status " +
                               std::to_string(status));
        }
        sent += static_cast<std::size_t>(n);
    }
}

std::string BridgeClient::read_line() {
    const auto deadline = Clock::now() + timeout_;
    for (;;) {
        if (auto pos = buffer_.find('\n'); pos != std::string::npos) {
            std::string line = buffer_.substr(0, pos);
            buffer_.erase(0, pos + 1);
            return line;
        }
        const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
        if (remaining.count() <= 0) {
            fail("timed out after " + std::to_string(timeout_.count()) + " ms");
        }
        pollfd pfd{fd_, POLLIN, 0};
        const int ready = ::poll(&pfd, 1, static_cast<int>(remaining.count()));
        if (ready < 0) {
            if (errno == EINTR) continue;
            fail("poll failed: " + std::string(std::strerror(errno)));
        }
        if (ready == 0) {
            continue;
        }
        char chunk[4096];
        const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
        if (n < 0) {
            if (errno == EINTR) continue;
            fail("read failed: " + std::string(std::strerror(errno)));
        }
        if (n == 0) {
            const int status = reap(false);
            throw BackendError("adapter '" + command_ + "' exited with status " + std::to_string(status) +
                               " before responding");
        }
        buffer_.append(chunk, static_cast<std::size_t>(n));
    }
}

json BridgeClient::call(json request) {
    if (!running()) {
        throw BackendError("adapter '" + command_ + "' is not running");
    }
    const std::uint64_t id = next_id_++;
    request["id"] = id;
    write_line(request.dump());
    const std::string line = read_line();
    json response;
    try {
        response = json::parse(line);
    } catch (const json::exception&) {
        fail("malformed response line: " + line.substr(0, 200));
    }
    if (!response.is_object()) {
        fail("response is not a JSON object");
    }
    const auto it = response.find("id");
    if (it == response.end() || !it->is_number_unsigned() || it->get<std::uint64_t>() != id) {
        fail("response id does not match request id " + std::to_string(id));
    }
    return response;
}

namespace {

std::optional<std::string> error_message(const json& response) {
    const auto it = response.find("error");
    if (it == response.end() || it->is_null()) {
        return std::nullopt;
    }
    if (it->is_string()) {
        return it->get<std::string>();
    }
    if (it->is_object() && it->contains("message") && (*it)["message"].is_string()) {
        return (*it)["message"].get<std::string>();
    }
    return it->dump();
}

}  // namespace

BackendInfo BridgeClient::hello() {
    const json response = call({{"op", "hello"}});
    if (auto err = error_message(response)) {
        fail("hello rejected: " + *err);
    }
    BackendInfo info;
    try {
        info.name = response.at("name").get<std::string>();
        info.version = response.at("version").get<std::string>();
        for (const auto& c : response.at("capabilities").at("channels")) {
            info.channels.push_back(c.get<std::string>());
        }
    } catch (const json::exception& e) {
        fail(std::string("malformed hello response: ") + e.what());
    }
    return info;
}

int BridgeClient::shutdown() {
    if (!running()) {
        return -1;
    }
    try {
        call({{"op", "shutdown"}});
    } catch (const BackendError&) {
        return pid_ > 0 ? reap(true) : -1;
    }
    return reap(false);
}

json make_run_request(const PrepCircuit& circuit, const ChannelConfig& channel, const PauliString& observable,
                      std::uint32_t shots, std::uint64_t seed) {
    json gates = json::array();
    for (const auto& g : circuit.gates) {
        json entry = json::array({std::string(to_string(g.kind))});
        for (auto q : g.qubits) {
            entry.push_back(q);
        }
        gates.push_back(std::move(entry));
    }
    json qubits = json::array();
    for (std::size_t q = 0; q < circuit.num_qubits; ++q) {
        qubits.push_back(q);
    }
    return {{"op", "run"},
            {"circuit", std::move(gates)},
            {"num_qubits", circuit.num_qubits},
            {"noise", {{"channel", std::string(to_string(channel.kind))}, {"parameter", channel.parameter}, {"qubits", qubits}}},
            {"observable", observable.label()},
            {"shots", shots},
            {"seed", seed}};
}

ExpectationEstimate parse_run_response(const json& response) {
    if (auto err = error_message(response)) {
        throw BackendError("adapter error: " + *err);
    }
    const auto it = response.find("expectation");
    if (it == response.end() || !it->is_number()) {
        throw BackendError("run response lacks a numeric expectation");
    }
    const double value = it->get<double>();
    if (!std::isfinite(value) || std::abs(value) > 1.0 + 1e-9) {
        throw BackendError("expectation " + std::to_string(value) + " outside [-1, 1]");
    }
    ExpectationEstimate est;
    est.value = std::clamp(value, -1.0, 1.0);
    if (auto s = response.find("shots_used"); s != response.end() && s->is_number_unsigned()) {
        est.shots_used = s->get<std::uint32_t>();
    }
    if (est.shots_used > 0) {
        est.standard_error = std::sqrt((1.0 - est.value * est.value) / est.shots_used);
    }
    return est;
}

BridgeBackend::BridgeBackend(const BackendSpec& spec)
    : spec_(spec), client_(spec.bridge_command, spec.request_timeout), info_(client_.hello()) {
    const std::string wanted(to_string(spec.channel.kind));
    if (std::find(info_.channels.begin(), info_.channels.end(), wanted) == info_.channels.end()) {
        throw BackendError("adapter '" + info_.name + "' does not support channel '" + wanted + "'");
    }
}

BridgeBackend::~BridgeBackend() = default;

ExpectationEstimate BridgeBackend::run(const CellRequest& request) {
    if (request.plan.exact()) {
        throw InvalidInput("exact mode requires a builtin backend");
    }
    return parse_run_response(client_.call(
        make_run_request(request.circuit, spec_.channel, request.observable, *request.plan.shots, request.cell_seed)));
}

std::vector<ConformanceCheck> run_conformance(const std::string& command, std::uint32_t shots,
                                              std::chrono::milliseconds timeout) {
    std::vector<ConformanceCheck> checks;
    std::unique_ptr<BridgeClient> client;
    const double tolerance = 5.0 / std::sqrt(static_cast<double>(shots));

    auto record = [&](const std::string& name, auto&& body) {
        ConformanceCheck check{name, false, ""};
        try {
            if (!client || !client->running()) {
                client = std::make_unique<BridgeClient>(command, timeout);
            }
            check.detail = body();
            check.passed = check.detail.empty();
        } catch (const std::exception& e) {
            check.detail = e.what();
        }
        checks.push_back(std::move(check));
    };

    const ChannelConfig noiseless{ChannelKind::Identity, 0.0};
    auto noiseless_cell = [&](const PrepCircuit& circuit, const PauliString& p, std::uint64_t seed) -> std::string {
        const ExpectationEstimate got = parse_run_response(client->call(make_run_request(circuit, noiseless, p, shots, seed)));
        const double expected = exact_expectation(prepare_state(circuit), p);
        if (std::abs(got.value - expected) > tolerance) {
            return circuit.state_id + "/" + p.label() + ": got " + std::to_string(got.value) + ", expected " +
                   std::to_string(expected);
        }
        return "";
    };

    record("handshake", [&]() -> std::string {
        const BackendInfo info = client->hello();
        if (info.name.empty() || info.version.empty()) return "hello must report a name and a version";
        for (const char* c : {"identity", "depolarizing", "amplitude_damping", "phase_damping"}) {
            if (std::find(info.channels.begin(), info.channels.end(), c) == info.channels.end()) {
                return std::string("channel '") + c + "' not advertised";
            }
        }
        return "";
    });

    struct GateProbe {
        const char* gate;
        PrepCircuit circuit;
        const char* observable;
    };
    using enum GateKind;
    const std::vector<GateProbe> probes = {
        {"h", {"probe_h", 2, {{H, {0}}}}, "XI"},
        {"x", {"probe_x", 2, {{X, {1}}}}, "IZ"},
        {"s", {"probe_s", 2, {{H, {0}}, {S, {0}}}}, "YI"},
        {"sdg", {"probe_sdg", 2, {{H, {1}}, {Sdg, {1}}}}, "IY"},
        {"cx", {"probe_cx", 2, {{X, {0}}, {CX, {0, 1}}}}, "IZ"},
    };
    for (const auto& probe : probes) {
        record(std::string("gate:") + probe.gate,
               [&]() { return noiseless_cell(probe.circuit, PauliString(probe.observable), 11); });
    }

    const PrepCircuit bell = default_states().back();
    for (auto [kind, param] : {std::pair{ChannelKind::Depolarizing, 0.05}, std::pair{ChannelKind::AmplitudeDamping, 0.10},
                               std::pair{ChannelKind::PhaseDamping, 0.08}}) {
        record("channel:" + std::string(to_string(kind)), [&]() -> std::string {
            const json response = client->call(make_run_request(bell, {kind, param}, PauliString("XX"), shots, 5));
            const ExpectationEstimate est = parse_run_response(response);
            if (est.shots_used != shots) {
                return "shots_used " + std::to_string(est.shots_used) + " != " + std::to_string(shots);
            }
            if (!response.contains("wall_time_ms") || !response["wall_time_ms"].is_number()) {
                return "response lacks wall_time_ms";
            }
            return "";
        });
    }

    record("error:unknown_gate", [&]() -> std::string {
        json request = make_run_request(bell, noiseless, PauliString("ZZ"), shots, 1);
        request["circuit"] = json::array({json::array({"t", 0})});
        if (!error_message(client->call(request))) return "unknown gate accepted without an error response";
        client->hello();
        return "";
    });
    record("error:unknown_channel", [&]() -> std::string {
        json request = make_run_request(bell, noiseless, PauliString("ZZ"), shots, 1);
        request["noise"]["channel"] = "thermal_relaxation";
        if (!error_message(client->call(request))) return "unknown channel accepted without an error response";
        return "";
    });
    record("error:unknown_op", [&]() -> std::string {
        if (!error_message(client->call({{"op", "teleport"}}))) return "unknown op accepted without an error response";
        return "";
    });

    record("noiseless_agreement", [&]() -> std::string {
        const ReferenceSuite suite = default_suite();
        std::size_t failures = 0;
        std::string first;
        for (std::size_t i = 0; i < suite.states.size(); ++i) {
            for (std::size_t j = 0; j < suite.observables.size(); ++j) {
                std::string d = noiseless_cell(suite.states[i], suite.observables[j], derive_cell_seed(99, i, j));
                if (!d.empty()) {
                    if (first.empty()) first = d;
                    ++failures;
                }
            }
        }
        return failures == 0 ? "" : std::to_string(failures) + " cells outside 5/sqrt(shots); first " + first;
    });

    record("shutdown", [&]() -> std::string {
        const int status = client->shutdown();
        return status == 0 ? "" : "adapter exited with status " + std::to_string(status);
    });
    return checks;
}

}  // namespace shadowprint
