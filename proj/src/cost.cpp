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

#include "shadowprint/cost.hpp"

#include <algorithm>

#include "shadowprint/error.hpp"

namespace shadowprint {

namespace {

void check_qubits(unsigned n) {
    if (n < 1 || n > kMaxScalingQubits) {
        throw InvalidInput("qubit count must be between 1 and " + std::to_string(kMaxScalingQubits));
    }
}

}  // namespace

std::uint64_t suite_states(unsigned n) {
    check_qubits(n);
    return 5ULL * n - 1;
}

std::uint64_t suite_observables(unsigned n) {
    check_qubits(n);
    return 12ULL * n - 9;
}

MeasurementCount tomography_cost(unsigned n, std::uint64_t shots) {
    check_qubits(n);
    MeasurementCount configurations = 1;
    for (unsigned i = 0; i < n; ++i) {
        configurations *= 16;
    }
    return configurations * shots;
}

MeasurementCount shadow_cost(unsigned n, std::uint64_t shots) {
    return static_cast<MeasurementCount>(suite_states(n)) * suite_observables(n) * shots;
}

std::string to_decimal(MeasurementCount value) {
    if (value == 0) return "0";
    std::string digits;
    while (value > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double to_double(MeasurementCount value) { return static_cast<double>(value); }

CostReport cost_report(unsigned n, std::uint64_t shots) {
    CostReport r;
    r.qubits = n;
    r.tomography_measurements = tomography_cost(n, shots);
    r.shadow_measurements = shadow_cost(n, shots);
    r.ratio = r.shadow_measurements == 0 ? 0.0 : to_double(r.tomography_measurements) / to_double(r.shadow_measurements);
    return r;
}

std::vector<CostReport> scaling_series(unsigned max_qubits, std::uint64_t shots) {
    check_qubits(max_qubits);
    std::vector<CostReport> rows;
    for (unsigned n = 1; n <= max_qubits; ++n) {
        rows.push_back(cost_report(n, shots));
    }
    return rows;
}

}  // namespace shadowprint
