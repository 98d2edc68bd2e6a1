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
#include <string>
#include <string_view>
#include <vector>

#include "shadowprint/backend.hpp"
#include "shadowprint/fingerprint.hpp"

namespace shadowprint {

/// The six summary statistics of a fingerprint matrix.
struct FeatureVector {
    double mean_dev = 0.0;
    /// Population standard deviation over all entries.
    double std_dev = 0.0;
    double frobenius_norm = 0.0;
    /// Fraction of entries with |F_ij| < tau.
    double sparsity = 0.0;
    double max_abs_dev = 0.0;
    /// Population variance of the per-column population variances.
    double variance_pattern = 0.0;
};

enum class NoiseLabel { PhaseDamping, AmplitudeDamping, Depolarizing };

std::string_view to_string(NoiseLabel label);
std::optional<NoiseLabel> parse_noise_label(std::string_view name);

/// Classification thresholds and estimation constants. Defaults are the
/// values tuned for parameters (0.05, 0.10, 0.08) on the default suite;
/// `provenance` records where a given set came from.
struct AnalysisConfig {
    double sparsity_tau = 0.001;
    double phase_sparsity_threshold = 0.12;
    double amplitude_mean_threshold = 0.13;
    double c_dep = 2.14;
    double c_amp = 1.44;
    double amp_variance_scale = 0.001;
    double c_phase = 0.094;
    std::string provenance = "default";
};

FeatureVector extract_features(const RealMatrix& f, double sparsity_tau = 0.001);

/// First matching rule: sparsity > phase threshold -> phase damping;
/// |mean| > amplitude threshold -> amplitude damping; else depolarizing.
NoiseLabel classify(const FeatureVector& fv, const AnalysisConfig& config = {});

/// p = |mu| / C_dep;  gamma = (|mu| / C_amp + var_pattern / scale) / 2;
/// lambda = (1 - s) C_phase. Clamped to [0, 1].
double estimate_parameter(NoiseLabel label, const FeatureVector& fv, const AnalysisConfig& config = {});

struct NoiseDiagnosis {
    NoiseLabel label = NoiseLabel::Depolarizing;
    double estimated_parameter = 0.0;
    FeatureVector features;
    AnalysisConfig config;
};

NoiseDiagnosis diagnose(const RealMatrix& deviations, const AnalysisConfig& config = {});

/// sqrt(sum_ij (a_ij - b_ij)^2); dimensions must match.
double frobenius_distance(const RealMatrix& a, const RealMatrix& b);

/// Distance between two fingerprints' deviation matrices. Throws
/// SuiteMismatch unless both were built from the same suite.
double frobenius_distance(const FingerprintMatrix& a, const FingerprintMatrix& b);

/// Expected Frobenius distance from shot noise alone: sqrt(2 N / shots).
double noise_floor(std::size_t num_entries, std::uint64_t shots);

/// Distance/floor ratio above which a difference counts as systematic.
inline constexpr double kSystematicRatio = 3.0;

struct ComparisonReport {
    double distance = 0.0;
    /// sqrt(N (1/S_a + 1/S_b)); an exact-mode side contributes no noise.
    double noise_floor = 0.0;
    /// distance / floor; empty when the floor is zero.
    std::optional<double> ratio;
    bool systematic = false;
    /// a.deviations - b.deviations
    RealMatrix difference;
};

ComparisonReport compare_fingerprints(const FingerprintMatrix& a, const FingerprintMatrix& b);

/// One calibration sweep point: a channel configuration with known parameter.
struct CalibrationPoint {
    ChannelKind kind;
    double parameter;
};

struct CalibrationFit {
    NoiseLabel label;
    /// False when the sweep gives no positive signal; the base constant is kept.
    bool fitted = false;
    double constant = 0.0;
    /// Exact-mode features observed at each point of this channel's sweep.
    std::vector<FeatureVector> features;
    std::vector<double> parameters;
};

struct CalibrationResult {
    AnalysisConfig config;
    std::vector<CalibrationFit> fits;
};

/// Default sweep: depolarizing 0.05, amplitude damping 0.10, phase damping 0.08.
std::vector<CalibrationPoint> default_calibration_points();

/// Re-fits C_dep, C_amp and C_phase by least squares over exact-mode
/// fingerprints of `profile` on `suite`. Thresholds are left unchanged.
/// Constants whose channel has no sweep point, or whose sweep is degenerate,
/// keep their value from `base`; degenerate ones are listed in the provenance.
CalibrationResult calibrate_constants(const VariantProfile& profile, const ReferenceSuite& suite,
                                      const std::vector<CalibrationPoint>& points, const AnalysisConfig& base = {});

}  // namespace shadowprint
