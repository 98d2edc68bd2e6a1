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

#include "shadowprint/backend.hpp"

#include "shadowprint/bridge.hpp"
#include "shadowprint/error.hpp"

namespace shadowprint {

std::string_view library_version() { return "1.0.0"; }

std::string_view to_string(ApplicationPolicy policy) {
    return policy == ApplicationPolicy::PerState ? "per_state" : "per_gate";
}

std::string_view to_string(QubitOrder order) { return order == QubitOrder::MsbFirst ? "msb_first" : "lsb_first"; }

std::optional<ApplicationPolicy> parse_application_policy(std::string_view name) {
    if (name == "per_state") return ApplicationPolicy::PerState;
    if (name == "per_gate") return ApplicationPolicy::PerGate;
    return std::nullopt;
}

std::optional<QubitOrder> parse_qubit_order(std::string_view name) {
    if (name == "msb_first") return QubitOrder::MsbFirst;
    if (name == "lsb_first") return QubitOrder::LsbFirst;
    return std::nullopt;
}

VariantProfile variant_a() {
    return {"variant-A", DepolarizingVariant::PauliMix, ApplicationPolicy::PerState, QubitOrder::MsbFirst};
}

VariantProfile variant_b() {
    return {"variant-B", DepolarizingVariant::IdentityMix, ApplicationPolicy::PerGate, QubitOrder::LsbFirst};
}

std::optional<VariantProfile> builtin_profile(std::string_view name) {
    if (name == "variant-A") return variant_a();
    if (name == "variant-B") return variant_b();
    return std::nullopt;
}

std::string BackendSpec::id() const {
    return kind == Kind::Builtin ? "builtin:" + profile.name : "bridge:" + bridge_command;
}

BackendSpec parse_backend_spec(std::string_view text, ChannelConfig channel) {
    BackendSpec spec;
    spec.channel = channel;
    constexpr std::string_view kBuiltin = "builtin:";
    constexpr std::string_view kBridge = "bridge:";
    if (text.starts_with(kBuiltin)) {
        auto profile = builtin_profile(text.substr(kBuiltin.size()));
        if (!profile) {
            throw InvalidInput("unknown builtin profile '" + std::string(text.substr(kBuiltin.size())) +
                               "' (expected variant-A or variant-B)");
        }
        spec.kind = BackendSpec::Kind::Builtin;
        spec.profile = *profile;
        return spec;
    }
    if (text.starts_with(kBridge)) {
        spec.kind = BackendSpec::Kind::Bridge;
        spec.bridge_command = std::string(text.substr(kBridge.size()));
        if (spec.bridge_command.empty()) {
            throw InvalidInput("bridge backend needs a command line");
        }
        spec.profile = VariantProfile{"native", DepolarizingVariant::PauliMix, ApplicationPolicy::PerState,
                                      QubitOrder::MsbFirst};
        return spec;
    }
    throw InvalidInput("backend must be builtin:<profile> or bridge:<command>, got '" + std::string(text) + "'");
}

DensityMatrix evolve_noisy(const PrepCircuit& circuit, const KrausChannel& channel, ApplicationPolicy policy) {
    DensityMatrix rho = DensityMatrix::ground(circuit.num_qubits);
    for (const auto& gate : circuit.gates) {
        rho = conjugate(rho, gate_unitary(gate, circuit.num_qubits));
        if (policy == ApplicationPolicy::PerGate) {
            for (auto q : gate.qubits) {
                rho = apply_channel(rho, channel, q);
            }
        }
    }
    if (policy == ApplicationPolicy::PerState) {
        for (std::size_t q = 0; q < circuit.num_qubits; ++q) {
            rho = apply_channel(rho, channel, q);
        }
    }
    return rho;
}

BuiltinBackend::BuiltinBackend(VariantProfile profile, ChannelConfig channel)
    : profile_(std::move(profile)),
      channel_(make_channel(channel.kind, channel.parameter, profile_.depolarizing)),
      info_{"shadowprint-builtin:" + profile_.name, std::string(library_version()),
            {"identity", "depolarizing", "amplitude_damping", "phase_damping"}} {}

const DensityMatrix& BuiltinBackend::noisy_state(const PrepCircuit& circuit) {
    auto it = cache_.find(circuit.state_id);
    if (it == cache_.end()) {
        it = cache_.emplace(circuit.state_id, evolve_noisy(circuit, channel_, profile_.policy)).first;
    }
    return it->second;
}

ExpectationEstimate BuiltinBackend::run(const CellRequest& request) {
    const DensityMatrix& rho = noisy_state(request.circuit);
    if (profile_.qubit_order == QubitOrder::LsbFirst) {
        return sample_expectation(rho, request.observable.reversed(), request.plan, request.cell_seed);
    }
    return sample_expectation(rho, request.observable, request.plan, request.cell_seed);
}

std::unique_ptr<Backend> open_backend(const BackendSpec& spec) {
    if (spec.kind == BackendSpec::Kind::Builtin) {
        return std::make_unique<BuiltinBackend>(spec.profile, spec.channel);
    }
    return std::make_unique<BridgeBackend>(spec);
}

}  // namespace shadowprint
