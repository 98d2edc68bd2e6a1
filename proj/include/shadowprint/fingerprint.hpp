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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shadowprint/backend.hpp"
#include "shadowprint/estimation.hpp"
#include "shadowprint/suite.hpp"

namespace shadowprint {

/// Dense row-major real matrix.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> values() const noexcept { return data_; }
    std::span<double> values() noexcept { return data_; }

    friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);

struct FingerprintMetadata {
    std::string backend_id;
    /// Builtin profile; bridge backends record "native" semantics.
    VariantProfile profile;
    ChannelConfig channel;
    std::optional<std::uint32_t> shots;
    std::uint64_t master_seed = 0;
    std::string suite_version;
    /// ISO-8601 UTC creation time. Left empty unless requested so that
    /// identical runs produce identical files.
    std::optional<std::string> timestamp;
    BackendInfo backend_info;

    friend bool operator==(const FingerprintMetadata&, const FingerprintMetadata&) = default;
};

/// State x observable grid of observed-minus-ideal expectations.
struct FingerprintMatrix {
    ReferenceSuite suite;
    FingerprintMetadata metadata;
    RealMatrix ideal;
    RealMatrix observed;
    RealMatrix deviations;

    std::size_t k() const noexcept { return deviations.rows(); }
    std::size_t n() const noexcept { return deviations.cols(); }

    friend bool operator==(const FingerprintMatrix&, const FingerprintMatrix&) = default;
};

/// Ideal expectations of the noiseless prepared states, computed exactly.
RealMatrix ideal_expectations(const ReferenceSuite& suite);

/// Evaluates every (state, observable) cell on `backend`. Cell seeds come
/// from derive_cell_seed(plan.master_seed, i, j), so the result does not
/// depend on evaluation order. Backend failures are rethrown with the cell
/// coordinates attached.
FingerprintMatrix build_fingerprint(Backend& backend, const BackendSpec& spec, const ReferenceSuite& suite,
                                    const ShotPlan& plan);

/// Opens the backend described by `spec` and builds the fingerprint.
FingerprintMatrix build_fingerprint(const BackendSpec& spec, const ReferenceSuite& suite, const ShotPlan& plan);

/// Checks the structural invariants: matching dimensions, deviations equal
/// observed - ideal within 1e-12, every |F_ij| <= 2. Throws on violation.
void validate_fingerprint(const FingerprintMatrix& f);

}  // namespace shadowprint
