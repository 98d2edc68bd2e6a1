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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowprint/linalg.hpp"

namespace shadowprint {

enum class ChannelKind { Identity, Depolarizing, AmplitudeDamping, PhaseDamping };

/// How a platform realizes "depolarizing with probability p".
enum class DepolarizingVariant {
    /// rho -> (1-p) rho + p I/2; Kraus weights 1-3p/4 on I and p/4 on each Pauli.
    IdentityMix,
    /// rho -> (1-p) rho + (p/3)(X rho X + Y rho Y + Z rho Z).
    PauliMix,
};

std::string_view to_string(ChannelKind kind);
std::string_view to_string(DepolarizingVariant variant);
/// Accepts the wire names: identity, depolarizing, amplitude_damping, phase_damping.
std::optional<ChannelKind> parse_channel_kind(std::string_view name);
std::optional<DepolarizingVariant> parse_depolarizing_variant(std::string_view name);

/// A single-qubit CPTP map given by its Kraus operators.
struct KrausChannel {
    ChannelKind kind = ChannelKind::Identity;
    double parameter = 0.0;
    DepolarizingVariant variant = DepolarizingVariant::PauliMix;
    std::vector<ComplexMatrix> kraus_ops;
};

KrausChannel make_identity_channel();
KrausChannel make_depolarizing(double p, DepolarizingVariant variant);
KrausChannel make_amplitude_damping(double gamma);
KrausChannel make_phase_damping(double lambda);
/// Dispatches on `kind`; `variant` only matters for depolarizing.
KrausChannel make_channel(ChannelKind kind, double parameter, DepolarizingVariant variant);

struct CptpCheck {
    bool ok = false;
    /// || sum_i K_i^dagger K_i - I ||_max
    double residual = 0.0;
};

inline constexpr double kCptpTolerance = 1e-12;

CptpCheck verify_cptp(const std::vector<ComplexMatrix>& kraus_ops);
inline CptpCheck verify_cptp(const KrausChannel& ch) { return verify_cptp(ch.kraus_ops); }

/// rho' = sum_i K_i(q) rho K_i(q)^dagger with K_i lifted onto `qubit`.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, std::size_t qubit);

}  // namespace shadowprint
