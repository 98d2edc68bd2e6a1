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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shadowprint/linalg.hpp"

namespace shadowprint {

/// Preparation gate vocabulary, shared with the bridge wire format.
enum class GateKind { H, X, S, Sdg, CX };

std::string_view to_string(GateKind kind);
/// Lowercase wire names: h, x, s, sdg, cx. Throws InvalidInput otherwise.
GateKind parse_gate_kind(std::string_view name);
std::size_t gate_arity(GateKind kind);

struct Gate {
    GateKind kind;
    std::vector<std::size_t> qubits;

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Full-register unitary of `gate`; validates arity and qubit indices.
ComplexMatrix gate_unitary(const Gate& gate, std::size_t num_qubits);

struct PrepCircuit {
    std::string state_id;
    std::size_t num_qubits = 2;
    std::vector<Gate> gates;

    friend bool operator==(const PrepCircuit&, const PrepCircuit&) = default;
};

/// Reference states (rows) and observables (columns) of a fingerprint.
/// Fingerprints are only comparable when built from equal suites.
struct ReferenceSuite {
    std::string version;
    std::vector<PrepCircuit> states;
    std::vector<PauliString> observables;

    std::size_t num_qubits() const { return states.empty() ? 0 : states.front().num_qubits; }

    friend bool operator==(const ReferenceSuite&, const ReferenceSuite&) = default;
};

inline constexpr std::string_view kDefaultSuiteVersion = "suite_v1";

/// |00>, |01>, |10>, |11>, |+0>, |0+>, |++>, |i0>, |Phi+>, in that order.
std::vector<PrepCircuit> default_states();
/// XI, YI, ZI, IX, IY, IZ, then XX, XY, XZ, YX, YY, YZ, ZX, ZY, ZZ.
std::vector<PauliString> default_observables();
ReferenceSuite default_suite();

/// Throws InvalidInput describing the first structural problem found.
void validate_suite(const ReferenceSuite& suite);

/// Noiseless |psi><psi| prepared from |0...0>.
DensityMatrix prepare_state(const PrepCircuit& circuit);

}  // namespace shadowprint
