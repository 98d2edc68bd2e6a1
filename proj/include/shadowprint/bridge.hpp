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

#pragma once

/**
 * @file
 * Client side of the adapter bridge: newline-delimited UTF-8 JSON over the
 * standard input/output of a child process.
 *
 * Requests:   {"id": 7, "op": "hello" | "run" | "shutdown", ...}
 * run adds:   "circuit": [["h", 0], ["cx", 0, 1]],
 *             "noise": {"channel": "depolarizing", "parameter": 0.05, "qubits": [0, 1]},
 *             "observable": "XX", "shots": 500, "seed": <u64>
 * Responses:  {"id": 7, "expectation": 0.93, "shots_used": 500, "wall_time_ms": 1.5}
 *             {"id": 7, "error": "unsupported channel"}   (or {"message": ...})
 * hello response carries "name", "version" and "capabilities": {"channels": [...]}.
 */

#include <sys/types.h>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "shadowprint/backend.hpp"

namespace shadowprint {

/// One adapter child process driven by a strict request/response loop.
class BridgeClient {
public:
    /// Launches `command` through /bin/sh. Throws BackendError if the process
    /// cannot be started.
    BridgeClient(const std::string& command, std::chrono::milliseconds timeout);
    ~BridgeClient();

    BridgeClient(const BridgeClient&) = delete;
    BridgeClient& operator=(const BridgeClient&) = delete;

    /// Sends `request` with a fresh id and returns the matching response.
    /// Throws BackendError on timeout, child exit, malformed JSON or an id
    /// mismatch. Error responses are returned, not thrown.
    nlohmann::json call(nlohmann::json request);

    BackendInfo hello();
    /// Sends shutdown and waits for the child; returns its exit status.
    int shutdown();

    bool running() const noexcept { return pid_ > 0; }
    const std::string& command() const noexcept { return command_; }

private:
    void write_line(const std::string& line);
    std::string read_line();
    [[noreturn]] void fail(const std::string& what);
    int reap(bool force);

    std::string command_;
    std::chrono::milliseconds timeout_;
    pid_t pid_ = -1;
    int fd_ = -1;
    std::string buffer_;
    std::uint64_t next_id_ = 1;
};

/// Serialized form of a run request for one fingerprint cell.
nlohmann::json make_run_request(const PrepCircuit& circuit, const ChannelConfig& channel,
                                const PauliString& observable, std::uint32_t shots, std::uint64_t seed);

/// Parses a run response; throws BackendError carrying the adapter's message
/// for error responses and for out-of-range expectations.
ExpectationEstimate parse_run_response(const nlohmann::json& response);

class BridgeBackend final : public Backend {
public:
    /// Starts the adapter, performs the handshake and checks that the
    /// configured channel is advertised.
    explicit BridgeBackend(const BackendSpec& spec);
    ~BridgeBackend() override;

    const BackendInfo& info() const override { return info_; }
    ExpectationEstimate run(const CellRequest& request) override;

private:
    BackendSpec spec_;
    BridgeClient client_;
    BackendInfo info_;
};

struct ConformanceCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the adapter conformance suite against `command`: handshake, every
/// gate, every channel, the error path, noiseless agreement with exact
/// expectations on the default suite, and clean shutdown.
std::vector<ConformanceCheck> run_conformance(const std::string& command, std::uint32_t shots,
                                              std::chrono::milliseconds timeout);

}  // namespace shadowprint
