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

#include <array>
#include <cstdint>
#include <string>

#include "shadowprint/linalg.hpp"

namespace sptest {

/// Small deterministic generator for property tests (xorshift64*).
class Gen {
public:
    explicit Gen(std::uint64_t seed) : state_(seed * 2654435761ULL + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }
    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }
    bool coin() { return (next() & 1U) != 0; }

    shadowprint::Complex complex() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

    shadowprint::ComplexMatrix matrix(std::size_t rows, std::size_t cols) {
        shadowprint::ComplexMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex();
        return m;
    }

    /// Random mixed state rho = A A^dagger / tr(A A^dagger), sometimes pure.
    shadowprint::DensityMatrix density(std::size_t num_qubits) {
        const std::size_t dim = std::size_t{1} << num_qubits;
        const std::size_t rank = coin() ? 1 : 1 + index(dim);
        const shadowprint::ComplexMatrix a = matrix(dim, rank);
        shadowprint::ComplexMatrix rho = a * shadowprint::conjugate_transpose(a);
        const double tr = shadowprint::trace(rho).real();
        rho *= shadowprint::Complex(1.0 / tr, 0.0);
        // Symmetrize away rounding in the off-diagonal pairs.
        shadowprint::ComplexMatrix herm = shadowprint::Complex(0.5, 0.0) * (rho + shadowprint::conjugate_transpose(rho));
        return shadowprint::DensityMatrix::from_matrix(herm);
    }

    std::string pauli_label(std::size_t n) {
        static constexpr std::array<char, 4> kSymbols{'I', 'X', 'Y', 'Z'};
        std::string s;
        for (std::size_t i = 0; i < n; ++i) s.push_back(kSymbols[index(4)]);
        return s;
    }

private:
    std::uint64_t state_;
};

}  // namespace sptest
