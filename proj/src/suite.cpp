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

#include "shadowprint/suite.hpp"

#include <cmath>
#include <set>

#include "shadowprint/error.hpp"

namespace shadowprint {

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::X:
            return "x";
        case GateKind::S:
            return "s";
        case GateKind::Sdg:
            return "sdg";
        case GateKind::CX:
            return "cx";
    }
    return "unknown";
}

GateKind parse_gate_kind(std::string_view name) {
    for (auto kind : {GateKind::H, GateKind::X, GateKind::S, GateKind::Sdg, GateKind::CX}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    throw InvalidInput("unknown gate '" + std::string(name) + "'");
}

std::size_t gate_arity(GateKind kind) { return kind == GateKind::CX ? 2 : 1; }

namespace {

ComplexMatrix single_qubit_gate(GateKind kind) {
    using namespace std::complex_literals;
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::H:
            return {{r, r}, {r, -r}};
        case GateKind::X:
            return pauli_matrix('X');
        case GateKind::S:
            return {{1.0, 0.0}, {0.0, 1.0i}};
        case GateKind::Sdg:
            return {{1.0, 0.0}, {0.0, -1.0i}};
        case GateKind::CX:
            break;
    }
    throw InvalidInput("not a single-qubit gate");
}

void check_gate(const Gate& gate, std::size_t num_qubits) {
    if (gate.qubits.size() != gate_arity(gate.kind)) {
        throw InvalidInput("gate '" + std::string(to_string(gate.kind)) + "' expects " +
                           std::to_string(gate_arity(gate.kind)) + " qubit operand(s)");
    }
    for (auto q : gate.qubits) {
        if (q >= num_qubits) {
            throw InvalidInput("gate '" + std::string(to_string(gate.kind)) + "' targets qubit " +
                               std::to_string(q) + " outside a " + std::to_string(num_qubits) + "-qubit register");
        }
    }
    if (gate.kind == GateKind::CX && gate.qubits[0] == gate.qubits[1]) {
        throw InvalidInput("cx control and target must differ");
    }
}

}  // namespace

ComplexMatrix gate_unitary(const Gate& gate, std::size_t num_qubits) {
    check_gate(gate, num_qubits);
    if (gate.kind != GateKind::CX) {
        return embed_single_qubit(single_qubit_gate(gate.kind), gate.qubits[0], num_qubits);
    }
    // Permutation: flip the target bit wherever the control bit is set.
    const std::size_t dim = std::size_t{1} << num_qubits;
    const std::size_t control_bit = std::size_t{1} << (num_qubits - 1 - gate.qubits[0]);
    const std::size_t target_bit = std::size_t{1} << (num_qubits - 1 - gate.qubits[1]);
    ComplexMatrix u(dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
        const std::size_t image = (b & control_bit) ? (b ^ target_bit) : b;
        u(image, b) = 1.0;
    }
    return u;
}

std::vector<PrepCircuit> default_states() {
    const auto g = [](GateKind k, std::vector<std::size_t> q) { return Gate{k, std::move(q)}; };
    using enum GateKind;
    return {
        {"00", 2, {}},
        {"01", 2, {g(X, {1})}},
        {"10", 2, {g(X, {0})}},
        {"11", 2, {g(X, {0}), g(X, {1})}},
        {"plus0", 2, {g(H, {0})}},
        {"zero_plus", 2, {g(H, {1})}},
        {"plus_plus", 2, {g(H, {0}), g(H, {1})}},
        {"i0", 2, {g(H, {0}), g(S, {0})}},
        {"bell_phi_plus", 2, {g(H, {0}), g(CX, {0, 1})}},
    };
}

std::vector<PauliString> default_observables() {
    std::vector<PauliString> out;
    for (const char* label : {"XI", "YI", "ZI", "IX", "IY", "IZ"}) {
        out.emplace_back(label);
    }
    for (char a : {'X', 'Y', 'Z'}) {
        for (char b : {'X', 'Y', 'Z'}) {
            out.emplace_back(std::string{a, b});
        }
    }
    return out;
}

ReferenceSuite default_suite() {
    return ReferenceSuite{std::string(kDefaultSuiteVersion), default_states(), default_observables()};
}

void validate_suite(const ReferenceSuite& suite) {
    if (suite.version.empty()) {
        throw InvalidInput("suite version must not be empty");
    }
    if (suite.states.empty()) {
        throw InvalidInput("suite has no states");
    }
    if (suite.observables.empty()) {
        throw InvalidInput("suite has no observables");
    }
    const std::size_t n = suite.num_qubits();
    if (n == 0 || n > kMaxQubits) {
        throw InvalidInput("suite qubit count must be between 1 and " + std::to_string(kMaxQubits));
    }
    std::set<std::string> ids;
    for (const auto& state : suite.states) {
        if (state.state_id.empty()) {
            throw InvalidInput("state id must not be empty");
        }
        if (!ids.insert(state.state_id).second) {
            throw InvalidInput("duplicate state id '" + state.state_id + "'");
        }
        if (state.num_qubits != n) {
            throw InvalidInput("state '" + state.state_id + "' has a different qubit count");
        }
        for (const auto& gate : state.gates) {
            check_gate(gate, n);
        }
    }
    std::set<std::string> labels;
    for (const auto& p : suite.observables) {
        if (p.num_qubits() != n) {
            throw InvalidInput("observable '" + p.label() + "' does not match the suite qubit count");
        }
        if (p.is_identity()) {
            throw InvalidInput("identity observable '" + p.label() + "' carries no deviation information");
        }
        if (!labels.insert(p.label()).second) {
            throw InvalidInput("duplicate observable '" + p.label() + "'");
        }
    }
}

DensityMatrix prepare_state(const PrepCircuit& circuit) {
    ComplexMatrix ket = ComplexMatrix::basis_ket(std::size_t{1} << circuit.num_qubits, 0);
    for (const auto& gate : circuit.gates) {
        ket = gate_unitary(gate, circuit.num_qubits) * ket;
    }
    return DensityMatrix::from_ket(ket);
}

}  // namespace shadowprint
