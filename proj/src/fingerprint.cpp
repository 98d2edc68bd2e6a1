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

#include "shadowprint/fingerprint.hpp"

#include <cmath>

#include "shadowprint/error.hpp"

namespace shadowprint {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw InvalidInput("matrix value count " + std::to_string(data_.size()) + " does not match " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInput("dimension mismatch in matrix difference");
    }
    RealMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.values()[i] = a.values()[i] - b.values()[i];
    }
    return out;
}

RealMatrix ideal_expectations(const ReferenceSuite& suite) {
    RealMatrix ideal(suite.states.size(), suite.observables.size());
    for (std::size_t i = 0; i < suite.states.size(); ++i) {
        const DensityMatrix rho = prepare_state(suite.states[i]);
        for (std::size_t j = 0; j < suite.observables.size(); ++j) {
            ideal(i, j) = exact_expectation(rho, suite.observables[j]);
        }
    }
    return ideal;
}

FingerprintMatrix build_fingerprint(Backend& backend, const BackendSpec& spec, const ReferenceSuite& suite,
                                    const ShotPlan& plan) {
    validate_suite(suite);
    if (plan.shots && *plan.shots == 0) {
        throw InvalidInput("shot count must be at least 1");
    }
    FingerprintMatrix f;
    f.suite = suite;
    f.metadata.backend_id = spec.id();
    f.metadata.profile = spec.profile;
    f.metadata.channel = spec.channel;
    f.metadata.shots = plan.shots;
    f.metadata.master_seed = plan.master_seed;
    f.metadata.suite_version = suite.version;
    f.metadata.backend_info = backend.info();

    f.ideal = ideal_expectations(suite);
    f.observed = RealMatrix(f.ideal.rows(), f.ideal.cols());
    for (std::size_t i = 0; i < suite.states.size(); ++i) {
        for (std::size_t j = 0; j < suite.observables.size(); ++j) {
            const CellRequest request{suite.states[i], suite.observables[j], plan,
                                      derive_cell_seed(plan.master_seed, i, j)};
            try {
                f.observed(i, j) = backend.run(request).value;
            } catch (const BackendError& e) {
                throw BackendError("cell (" + suite.states[i].state_id + ", " + suite.observables[j].label() +
                                   ") [" + std::to_string(i) + "," + std::to_string(j) + "]: " + e.what());
            }
        }
    }
    f.deviations = f.observed - f.ideal;
    return f;
}

FingerprintMatrix build_fingerprint(const BackendSpec& spec, const ReferenceSuite& suite, const ShotPlan& plan) {
    if (plan.exact() && spec.kind == BackendSpec::Kind::Bridge) {
        throw InvalidInput("exact mode requires a builtin backend");
    }
    auto backend = open_backend(spec);
    return build_fingerprint(*backend, spec, suite, plan);
}

void validate_fingerprint(const FingerprintMatrix& f) {
    const std::size_t k = f.suite.states.size();
    const std::size_t n = f.suite.observables.size();
    for (const RealMatrix* m : {&f.ideal, &f.observed, &f.deviations}) {
        if (m->rows() != k || m->cols() != n) {
            throw InvalidInput("fingerprint matrices do not match the suite dimensions " + std::to_string(k) + "x" +
                               std::to_string(n));
        }
    }
    for (std::size_t idx = 0; idx < f.deviations.size(); ++idx) {
        const double d = f.deviations.values()[idx];
        if (!std::isfinite(d) || std::abs(d) > 2.0) {
            throw InvalidInput("deviation out of range at entry " + std::to_string(idx));
        }
        if (std::abs(d - (f.observed.values()[idx] - f.ideal.values()[idx])) > 1e-12) {
            throw InvalidInput("deviations are not observed - ideal at entry " + std::to_string(idx));
        }
    }
}

}  // namespace shadowprint
