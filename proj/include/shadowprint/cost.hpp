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

#include <cstdint>
#include <string>
#include <vector>

namespace shadowprint {

/// Wide enough for 16^16 * 2^32 measurements.
__extension__ typedef unsigned __int128 MeasurementCount;

inline constexpr unsigned kMaxScalingQubits = 16;

/// Reference figures quoted for an 8-qubit system at 500 shots.
inline constexpr unsigned kReferenceQubits = 8;
inline constexpr std::uint64_t kReferenceShots = 500;
inline constexpr std::uint64_t kReferenceShadowMeasurements = 864'000;
inline constexpr double kReferenceTomographyMeasurements = 2.1e12;

/// States in the scaled suite: 2n basis + 2n superposition + (n-1) entangled.
std::uint64_t suite_states(unsigned n);
/// Observables in the scaled suite: 3n single-qubit + 9(n-1) neighbour correlators.
std::uint64_t suite_observables(unsigned n);

/// 4^n inputs x 4^n observables x shots.
MeasurementCount tomography_cost(unsigned n, std::uint64_t shots);
/// suite_states(n) x suite_observables(n) x shots.
MeasurementCount shadow_cost(unsigned n, std::uint64_t shots);

std::string to_decimal(MeasurementCount value);
double to_double(MeasurementCount value);

struct CostReport {
    unsigned qubits = 0;
    MeasurementCount tomography_measurements = 0;
    MeasurementCount shadow_measurements = 0;
    /// tomography / shadow
    double ratio = 0.0;
};

CostReport cost_report(unsigned n, std::uint64_t shots);
/// Rows for n = 1..max_qubits; throws InvalidInput past kMaxScalingQubits.
std::vector<CostReport> scaling_series(unsigned max_qubits, std::uint64_t shots);

}  // namespace shadowprint
