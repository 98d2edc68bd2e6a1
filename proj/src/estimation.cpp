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

#include "shadowprint/estimation.hpp"

#include <algorithm>
#include <cmath>

#include "shadowprint/error.hpp"

namespace shadowprint {

ShotPlan ShotPlan::sampled(std::uint32_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw InvalidInput("shot count must be at least 1");
    }
    return ShotPlan{shots, seed};
}

double exact_expectation(const DensityMatrix& rho, const PauliString& p) {
    if (p.num_qubits() != rho.num_qubits()) {
        throw InvalidInput("observable '" + p.label() + "' does not match a " + std::to_string(rho.num_qubits()) +
                           "-qubit state");
    }
    const Complex t = trace(rho.matrix() * pauli_string_matrix(p));
    if (std::abs(t.imag()) > 1e-10) {
        throw NumericalIntegrityError("expectation of '" + p.label() + "' has imaginary part " +
                                      std::to_string(t.imag()));
    }
    return t.real();
}

std::vector<Gate> eigenbasis_rotation(const PauliString& p) {
    std::vector<Gate> gates;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        if (p[q] == 'X') {
            gates.push_back({GateKind::H, {q}});
        } else if (p[q] == 'Y') {
            gates.push_back({GateKind::Sdg, {q}});
            gates.push_back({GateKind::H, {q}});
        }
    }
    return gates;
}

std::vector<double> measurement_distribution(const DensityMatrix& rho, const PauliString& p) {
    if (p.num_qubits() != rho.num_qubits()) {
        throw InvalidInput("observable '" + p.label() + "' does not match the state");
    }
    DensityMatrix rotated = rho;
    for (const auto& gate : eigenbasis_rotation(p)) {
        rotated = conjugate(rotated, gate_unitary(gate, rho.num_qubits()));
    }
    std::vector<double> probs(rotated.dim());
    double total = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        double v = rotated.matrix()(i, i).real();
        if (v < -1e-10 || !std::isfinite(v)) {
            throw NumericalIntegrityError("outcome probability " + std::to_string(v) + " for observable '" +
                                          p.label() + "'");
        }
        probs[i] = std::max(v, 0.0);
        total += probs[i];
    }
    if (total <= 0.0) {
        throw NumericalIntegrityError("outcome distribution has zero mass");
    }
    for (auto& v : probs) {
        v /= total;
    }
    return probs;
}

int outcome_eigenvalue(const PauliString& p, std::size_t index) {
    const std::size_t n = p.num_qubits();
    int sign = 1;
    for (std::size_t q = 0; q < n; ++q) {
        const bool bit = (index >> (n - 1 - q)) & 1U;
        if (p[q] != 'I' && bit) {
            sign = -sign;
        }
    }
    return sign;
}

ExpectationEstimate sample_expectation(const DensityMatrix& rho, const PauliString& p, const ShotPlan& plan,
                                       std::uint64_t cell_seed) {
    if (p.is_identity()) {
        throw InvalidInput("the all-identity observable carries no information");
    }
    if (plan.exact()) {
        return {exact_expectation(rho, p), 0, 0.0};
    }
    const std::uint32_t shots = *plan.shots;
    if (shots == 0) {
        throw InvalidInput("shot count must be at least 1");
    }
    const std::vector<double> probs = measurement_distribution(rho, p);
    std::vector<double> cdf(probs.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        running += probs[i];
        cdf[i] = running;
    }
    cdf.back() = 1.0;

    CounterRng rng(cell_seed);
    std::int64_t sum = 0;
    for (std::uint32_t s = 0; s < shots; ++s) {
        const double u = rng.next_unit();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const auto index = static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
        sum += outcome_eigenvalue(p, index);
    }
    const double value = static_cast<double>(sum) / shots;
    return {value, shots, std::sqrt(std::max(0.0, 1.0 - value * value) / shots)};
}

}  // namespace shadowprint
