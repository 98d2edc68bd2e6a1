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

#include "shadowprint/channels.hpp"

#include <algorithm>
#include <cmath>

#include "shadowprint/error.hpp"

namespace shadowprint {

std::string_view to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::Identity:
            return "identity";
        case ChannelKind::Depolarizing:
            return "depolarizing";
        case ChannelKind::AmplitudeDamping:
            return "amplitude_damping";
        case ChannelKind::PhaseDamping:
            return "phase_damping";
    }
    return "unknown";
}

std::string_view to_string(DepolarizingVariant variant) {
    return variant == DepolarizingVariant::IdentityMix ? "identity_mix" : "pauli_mix";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view name) {
    for (auto kind : {ChannelKind::Identity, ChannelKind::Depolarizing, ChannelKind::AmplitudeDamping,
                      ChannelKind::PhaseDamping}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

std::optional<DepolarizingVariant> parse_depolarizing_variant(std::string_view name) {
    if (name == "identity_mix") return DepolarizingVariant::IdentityMix;
    if (name == "pauli_mix") return DepolarizingVariant::PauliMix;
    return std::nullopt;
}

namespace {

void check_unit_interval(double value, std::string_view what) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InvalidInput(std::string(what) + " must lie in [0, 1], got " + std::to_string(value));
    }
}

}  // namespace

KrausChannel make_identity_channel() {
    return KrausChannel{ChannelKind::Identity, 0.0, DepolarizingVariant::PauliMix, {ComplexMatrix::identity(2)}};
}

KrausChannel make_depolarizing(double p, DepolarizingVariant variant) {
    check_unit_interval(p, "depolarizing probability");
    const double w_identity = variant == DepolarizingVariant::IdentityMix ? 1.0 - 0.75 * p : 1.0 - p;
    const double w_pauli = variant == DepolarizingVariant::IdentityMix ? 0.25 * p : p / 3.0;
    KrausChannel ch{ChannelKind::Depolarizing, p, variant, {}};
    ch.kraus_ops.push_back(std::sqrt(w_identity) * pauli_matrix('I'));
    for (char s : {'X', 'Y', 'Z'}) {
        ch.kraus_ops.push_back(std::sqrt(w_pauli) * pauli_matrix(s));
    }
    return ch;
}

KrausChannel make_amplitude_damping(double gamma) {
    check_unit_interval(gamma, "amplitude damping rate");
    KrausChannel ch{ChannelKind::AmplitudeDamping, gamma, DepolarizingVariant::PauliMix, {}};
    ch.kraus_ops.push_back(ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}});
    ch.kraus_ops.push_back(ComplexMatrix{{0.0, std::sqrt(gamma)}, {0.0, 0.0}});
    return ch;
}

KrausChannel make_phase_damping(double lambda) {
    check_unit_interval(lambda, "phase damping rate");
    KrausChannel ch{ChannelKind::PhaseDamping, lambda, DepolarizingVariant::PauliMix, {}};
    ch.kraus_ops.push_back(ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - lambda)}});
    ch.kraus_ops.push_back(ComplexMatrix{{0.0, 0.0}, {0.0, std::sqrt(lambda)}});
    return ch;
}

KrausChannel make_channel(ChannelKind kind, double parameter, DepolarizingVariant variant) {
    switch (kind) {
        case ChannelKind::Identity:
            check_unit_interval(parameter, "identity channel parameter");
            return make_identity_channel();
        case ChannelKind::Depolarizing:
            return make_depolarizing(parameter, variant);
        case ChannelKind::AmplitudeDamping:
            return make_amplitude_damping(parameter);
        case ChannelKind::PhaseDamping:
            return make_phase_damping(parameter);
    }
    throw InvalidInput("unknown channel kind");
}

CptpCheck verify_cptp(const std::vector<ComplexMatrix>& kraus_ops) {
    if (kraus_ops.empty()) {
        return {false, 1.0};
    }
    const std::size_t dim = kraus_ops.front().rows();
    ComplexMatrix sum(dim, dim);
    for (const auto& k : kraus_ops) {
        if (k.rows() != dim || k.cols() != dim) {
            return {false, 1.0};
        }
        sum += conjugate_transpose(k) * k;
    }
    const double residual = max_abs_difference(sum, ComplexMatrix::identity(dim));
    return {residual <= kCptpTolerance, residual};
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, std::size_t qubit) {
    if (qubit >= rho.num_qubits()) {
        throw InvalidInput("channel target qubit " + std::to_string(qubit) + " out of range for " +
                           std::to_string(rho.num_qubits()) + " qubits");
    }
    ComplexMatrix out(rho.dim(), rho.dim());
    for (const auto& k : ch.kraus_ops) {
        const ComplexMatrix lifted = embed_single_qubit(k, qubit, rho.num_qubits());
        out += lifted * rho.matrix() * conjugate_transpose(lifted);
    }
    return DensityMatrix::unchecked(rho.num_qubits(), std::move(out));
}

}  // namespace shadowprint
