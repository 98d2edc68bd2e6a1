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
#include <optional>
#include <vector>

#include "shadowprint/linalg.hpp"
#include "shadowprint/suite.hpp"

namespace shadowprint {

/// Shot budget per (state, observable) cell. An empty `shots` selects exact
/// mode: observed values are exact noisy expectations instead of sample means.
struct ShotPlan {
    std::optional<std::uint32_t> shots;
    std::uint64_t master_seed = 0;

    bool exact() const noexcept { return !shots.has_value(); }

    static ShotPlan sampled(std::uint32_t shots, std::uint64_t seed);
    static ShotPlan exact_mode(std::uint64_t seed = 0) { return ShotPlan{std::nullopt, seed}; }
};

struct ExpectationEstimate {
    double value = 0.0;
    std::uint32_t shots_used = 0;
    /// sqrt((1 - value^2) / shots); zero in exact mode.
    double standard_error = 0.0;
};

/// Re tr(rho P). Throws InvalidInput on dimension mismatch and
/// NumericalIntegrityError if the imaginary part exceeds 1e-10.
double exact_expectation(const DensityMatrix& rho, const PauliString& p);

/// Gates that rotate the eigenbasis of `p` onto the computational basis:
/// X -> h, Y -> sdg then h, Z and I -> nothing.
std::vector<Gate> eigenbasis_rotation(const PauliString& p);

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// h0 = mix64(master); h1 = mix64(h0 ^ (i+1)*0x100000001b3);
/// seed = mix64(h1 ^ (j+1)*0xc2b2ae3d27d4eb4f).
constexpr std::uint64_t derive_cell_seed(std::uint64_t master_seed, std::uint64_t state_index,
                                         std::uint64_t observable_index) noexcept {
    std::uint64_t h = mix64(master_seed);
    h = mix64(h ^ ((state_index + 1) * 0x100000001b3ULL));
    return mix64(h ^ ((observable_index + 1) * 0xc2b2ae3d27d4eb4fULL));
}

/// Counter-based uniform generator: draw k is mix64(seed + k * golden), so a
/// stream is a pure function of (seed, k) with no hidden state across cells.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t next_u64() noexcept { return mix64(seed_ + (counter_++) * 0x9e3779b97f4a7c15ULL); }
    /// Uniform in [0, 1) with 53 bits of resolution.
    double next_unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// Computational-basis outcome probabilities of `rho` after rotating into
/// the eigenbasis of `p`. Entries below -1e-10 raise NumericalIntegrityError;
/// smaller negatives are clamped to zero before renormalization.
std::vector<double> measurement_distribution(const DensityMatrix& rho, const PauliString& p);

/// Eigenvalue of `p` attached to bitstring `index` (qubit 0 = most significant bit).
int outcome_eigenvalue(const PauliString& p, std::size_t index);

/// Shot-based estimate of <p> on `rho`. In exact mode returns the exact value.
ExpectationEstimate sample_expectation(const DensityMatrix& rho, const PauliString& p, const ShotPlan& plan,
                                       std::uint64_t cell_seed);

}  // namespace shadowprint
