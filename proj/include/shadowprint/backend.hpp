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

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowprint/channels.hpp"
#include "shadowprint/estimation.hpp"
#include "shadowprint/suite.hpp"

namespace shadowprint {

/// Where noise is inserted during state preparation.
enum class ApplicationPolicy {
    /// Once per qubit after the whole preparation circuit.
    PerState,
    /// After every gate, on each qubit the gate touches.
    PerGate,
};

/// How a backend maps Pauli label characters onto qubits.
enum class QubitOrder {
    /// Character 0 acts on qubit 0 (the toolkit's own convention).
    MsbFirst,
    /// Character 0 acts on the highest-index qubit.
    LsbFirst,
};

std::string_view to_string(ApplicationPolicy policy);
std::string_view to_string(QubitOrder order);
std::optional<ApplicationPolicy> parse_application_policy(std::string_view name);
std::optional<QubitOrder> parse_qubit_order(std::string_view name);

/// One emulated platform's semantics for identically named noise settings.
struct VariantProfile {
    std::string name;
    DepolarizingVariant depolarizing = DepolarizingVariant::PauliMix;
    ApplicationPolicy policy = ApplicationPolicy::PerState;
    QubitOrder qubit_order = QubitOrder::MsbFirst;

    friend bool operator==(const VariantProfile&, const VariantProfile&) = default;
};

/// {pauli_mix, per_state, msb_first}
VariantProfile variant_a();
/// {identity_mix, per_gate, lsb_first}
VariantProfile variant_b();
std::optional<VariantProfile> builtin_profile(std::string_view name);

struct ChannelConfig {
    ChannelKind kind = ChannelKind::Identity;
    double parameter = 0.0;

    friend bool operator==(const ChannelConfig&, const ChannelConfig&) = default;
};

struct BackendSpec {
    enum class Kind { Builtin, Bridge };

    Kind kind = Kind::Builtin;
    VariantProfile profile = variant_a();
    ChannelConfig channel;
    /// Shell command line launching the adapter (bridge backends only).
    std::string bridge_command;
    std::chrono::milliseconds request_timeout{30000};

    /// "builtin:<profile>" or "bridge:<command>".
    std::string id() const;
};

/// Parses "builtin:variant-A", "builtin:variant-B" or "bridge:<command line>".
BackendSpec parse_backend_spec(std::string_view text, ChannelConfig channel);

/// Result of the hello handshake (synthesized for builtin backends).
struct BackendInfo {
    std::string name;
    std::string version;
    std::vector<std::string> channels;

    friend bool operator==(const BackendInfo&, const BackendInfo&) = default;
};

struct CellRequest {
    const PrepCircuit& circuit;
    const PauliString& observable;
    const ShotPlan& plan;
    std::uint64_t cell_seed = 0;
};

/// A source of observed expectations for fingerprint cells.
class Backend {
public:
    virtual ~Backend() = default;

    virtual const BackendInfo& info() const = 0;
    virtual ExpectationEstimate run(const CellRequest& request) = 0;
};

/// Noisy density matrix after preparing `circuit` under `channel` with `policy`.
DensityMatrix evolve_noisy(const PrepCircuit& circuit, const KrausChannel& channel, ApplicationPolicy policy);

/// Exact density-matrix backend parameterized by a variant profile.
class BuiltinBackend final : public Backend {
public:
    BuiltinBackend(VariantProfile profile, ChannelConfig channel);

    const BackendInfo& info() const override { return info_; }
    ExpectationEstimate run(const CellRequest& request) override;

    const VariantProfile& profile() const noexcept { return profile_; }
    const KrausChannel& channel() const noexcept { return channel_; }
    const DensityMatrix& noisy_state(const PrepCircuit& circuit);

private:
    VariantProfile profile_;
    KrausChannel channel_;
    BackendInfo info_;
    std::map<std::string, DensityMatrix> cache_;
};

/// Builtin or bridge backend for `spec`. Bridge backends perform the
/// handshake here and throw BackendError on failure.
std::unique_ptr<Backend> open_backend(const BackendSpec& spec);

/// Library version string reported by builtin backends and the CLI.
std::string_view library_version();

}  // namespace shadowprint
