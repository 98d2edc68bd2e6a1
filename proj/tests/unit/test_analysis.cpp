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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shadowprint/analysis.hpp"
#include "shadowprint/backend.hpp"
#include "shadowprint/error.hpp"
#include "shadowprint/fingerprint.hpp"
#include "test_gen.hpp"

using namespace shadowprint;

namespace {

FingerprintMatrix exact_fingerprint(const std::string& backend, ChannelKind kind, double param) {
    return build_fingerprint(parse_backend_spec(backend, {kind, param}), default_suite(), ShotPlan::exact_mode());
}

FingerprintMatrix sampled_fingerprint(const std::string& backend, ChannelKind kind, double param, std::uint64_t seed) {
    return build_fingerprint(parse_backend_spec(backend, {kind, param}), default_suite(), ShotPlan::sampled(500, seed));
}

FeatureVector features_with(double s, double mu) {
    FeatureVector fv;
    fv.sparsity = s;
    fv.mean_dev = mu;
    return fv;
}

}  // namespace

TEST(Fingerprint, DefaultDimensionsAndInvariants) {
    const FingerprintMatrix f = sampled_fingerprint("builtin:variant-A", ChannelKind::Depolarizing, 0.05, 1);
    EXPECT_EQ(f.k(), 9u);
    EXPECT_EQ(f.n(), 15u);
    for (std::size_t i = 0; i < f.k(); ++i)
        for (std::size_t j = 0; j < f.n(); ++j) {
            EXPECT_NEAR(f.deviations(i, j), f.observed(i, j) - f.ideal(i, j), 1e-12);
            EXPECT_LE(std::abs(f.deviations(i, j)), 2.0);
            EXPECT_LE(std::abs(f.observed(i, j)), 1.0);
        }
    EXPECT_NO_THROW(validate_fingerprint(f));
    EXPECT_EQ(f.metadata.shots, std::optional<std::uint32_t>(500));
    EXPECT_EQ(f.metadata.suite_version, "suite_v1");
    EXPECT_EQ(f.metadata.backend_id, "builtin:variant-A");
}

TEST(Fingerprint, AmplitudeDampingCellOnOneOne) {
    const FingerprintMatrix f = exact_fingerprint("builtin:variant-A", ChannelKind::AmplitudeDamping, 0.10);
    // |11>, ZI: <Z> on a decayed |1> is 2 gamma - 1 against an ideal of -1.
    EXPECT_NEAR(f.deviations(3, 2), 0.20, 1e-12);
    EXPECT_NEAR(f.deviations(3, 5), 0.20, 1e-12);
    // ZZ: (2 gamma - 1)^2 - 1.
    EXPECT_NEAR(f.deviations(3, 14), 0.64 - 1.0, 1e-12);
}

TEST(Fingerprint, IdealMatchesNoiselessExactObserved) {
    const FingerprintMatrix f = exact_fingerprint("builtin:variant-A", ChannelKind::Identity, 0.0);
    for (double v : f.deviations.values()) EXPECT_NEAR(v, 0.0, 1e-12);
}

TEST(Fingerprint, ValidateRejectsInconsistentMatrices) {
    FingerprintMatrix f = exact_fingerprint("builtin:variant-A", ChannelKind::PhaseDamping, 0.08);
    f.deviations(0, 0) += 1e-6;
    EXPECT_THROW(validate_fingerprint(f), Error);
    f = exact_fingerprint("builtin:variant-A", ChannelKind::PhaseDamping, 0.08);
    f.observed = RealMatrix(2, 2);
    EXPECT_THROW(validate_fingerprint(f), Error);
}

TEST(Analysis, FrobeniusDistanceHandExample) {
    const RealMatrix a(2, 2, {1, 0, 0, 0});
    const RealMatrix b(2, 2, {0, 0, 0, 1});
    EXPECT_NEAR(frobenius_distance(a, b), std::sqrt(2.0), 1e-15);
    EXPECT_THROW(frobenius_distance(a, RealMatrix(2, 3)), InvalidInput);
}

TEST(Analysis, NoiseFloor) {
    EXPECT_NEAR(noise_floor(135, 500), 0.7348, 1e-4);
    EXPECT_NEAR(noise_floor(135, 500), std::sqrt(135.0) * std::sqrt(2.0) / std::sqrt(500.0), 1e-15);
    EXPECT_THROW(noise_floor(135, 0), InvalidInput);
}

TEST(Analysis, FeaturesHandExample) {
    const FeatureVector fv = extract_features(RealMatrix(2, 2, {0.1, 0.0, 0.3, 0.0}));
    EXPECT_NEAR(fv.mean_dev, 0.1, 1e-15);
    EXPECT_NEAR(fv.sparsity, 0.5, 1e-15);
    EXPECT_NEAR(fv.frobenius_norm, std::sqrt(0.1), 1e-15);
    EXPECT_NEAR(fv.max_abs_dev, 0.3, 1e-15);
    EXPECT_NEAR(fv.variance_pattern, 2.5e-5, 1e-15);
    // Entries 0.1, 0, 0.3, 0 around 0.1: squared deviations 0, 0.01, 0.04, 0.01.
    EXPECT_NEAR(fv.std_dev, std::sqrt(0.015), 1e-15);
}

TEST(Analysis, FeaturesOfConstantMatrix) {
    const FeatureVector fv = extract_features(RealMatrix(3, 5, std::vector<double>(15, 0.2)));
    EXPECT_NEAR(fv.mean_dev, 0.2, 1e-15);
    EXPECT_NEAR(fv.std_dev, 0.0, 1e-15);
    EXPECT_NEAR(fv.sparsity, 0.0, 0.0);
    EXPECT_NEAR(fv.variance_pattern, 0.0, 1e-30);
    EXPECT_NEAR(fv.frobenius_norm, std::sqrt(15 * 0.04), 1e-15);
}

TEST(Analysis, ClassificationRuleOrder) {
    EXPECT_EQ(classify(features_with(0.20, 0.5)), NoiseLabel::PhaseDamping);
    EXPECT_EQ(classify(features_with(0.05, -0.2)), NoiseLabel::AmplitudeDamping);
    EXPECT_EQ(classify(features_with(0.05, 0.01)), NoiseLabel::Depolarizing);
    // Thresholds are strict.
    EXPECT_EQ(classify(features_with(0.12, 0.13)), NoiseLabel::Depolarizing);
    AnalysisConfig cfg;
    cfg.phase_sparsity_threshold = 0.3;
    EXPECT_EQ(classify(features_with(0.20, 0.5), cfg), NoiseLabel::AmplitudeDamping);
}

TEST(Analysis, EstimationFormulas) {
    FeatureVector fv = features_with(0.05, -0.107);
    EXPECT_NEAR(estimate_parameter(NoiseLabel::Depolarizing, fv), 0.05, 1e-12);
    fv = features_with(0.1489, 0.0);
    EXPECT_NEAR(estimate_parameter(NoiseLabel::PhaseDamping, fv), 0.08, 1e-4);
    fv = features_with(0.0, 0.144);
    fv.variance_pattern = 1e-4;
    EXPECT_NEAR(estimate_parameter(NoiseLabel::AmplitudeDamping, fv), 0.10, 1e-12);
    fv = features_with(0.0, 1.9);
    EXPECT_EQ(estimate_parameter(NoiseLabel::Depolarizing, fv, {.c_dep = 0.5}), 1.0);
}

TEST(Analysis, LabelNames) {
    for (auto l : {NoiseLabel::PhaseDamping, NoiseLabel::AmplitudeDamping, NoiseLabel::Depolarizing}) {
        EXPECT_EQ(parse_noise_label(to_string(l)), l);
    }
    EXPECT_EQ(parse_noise_label("thermal"), std::nullopt);
}

TEST(Analysis, ExactPhaseDampingClassifiedOnBothVariants) {
    for (const char* b : {"builtin:variant-A", "builtin:variant-B"}) {
        const FingerprintMatrix f = exact_fingerprint(b, ChannelKind::PhaseDamping, 0.08);
        const FeatureVector fv = extract_features(f.deviations);
        EXPECT_GT(fv.sparsity, 0.12) << b;
        EXPECT_EQ(classify(fv), NoiseLabel::PhaseDamping) << b;
    }
}

TEST(Analysis, CompareFlagsVariantGapAsSystematic) {
    const FingerprintMatrix a = sampled_fingerprint("builtin:variant-A", ChannelKind::Depolarizing, 0.05, 1);
    const FingerprintMatrix b = sampled_fingerprint("builtin:variant-B", ChannelKind::Depolarizing, 0.05, 2);
    const ComparisonReport r = compare_fingerprints(a, b);
    EXPECT_NEAR(r.noise_floor, noise_floor(135, 500), 1e-15);
    ASSERT_TRUE(r.ratio.has_value());
    EXPECT_GT(*r.ratio, 3.0);
    EXPECT_TRUE(r.systematic);
    EXPECT_EQ(r.difference, a.deviations - b.deviations);

    const FingerprintMatrix a2 = sampled_fingerprint("builtin:variant-A", ChannelKind::Depolarizing, 0.05, 3);
    const ComparisonReport same = compare_fingerprints(a, a2);
    EXPECT_LT(*same.ratio, 2.0);
    EXPECT_FALSE(same.systematic);
}

TEST(Analysis, CompareExactFingerprints) {
    const FingerprintMatrix a = exact_fingerprint("builtin:variant-A", ChannelKind::Depolarizing, 0.05);
    const FingerprintMatrix b = exact_fingerprint("builtin:variant-B", ChannelKind::Depolarizing, 0.05);
    const ComparisonReport r = compare_fingerprints(a, b);
    EXPECT_EQ(r.noise_floor, 0.0);
    EXPECT_FALSE(r.ratio.has_value());
    EXPECT_TRUE(r.systematic);
    EXPECT_FALSE(compare_fingerprints(a, a).systematic);

    // One exact side: only the sampled side contributes to the floor.
    const FingerprintMatrix s = sampled_fingerprint("builtin:variant-A", ChannelKind::Depolarizing, 0.05, 4);
    EXPECT_NEAR(compare_fingerprints(a, s).noise_floor, std::sqrt(135.0 / 500.0), 1e-15);
}

TEST(Analysis, CompareRejectsDifferentSuites) {
    FingerprintMatrix a = exact_fingerprint("builtin:variant-A", ChannelKind::Identity, 0.0);
    FingerprintMatrix b = a;
    b.suite.version = "other";
    EXPECT_THROW(frobenius_distance(a, b), SuiteMismatch);
    EXPECT_THROW(compare_fingerprints(a, b), SuiteMismatch);
}

TEST(Analysis, CalibrationRecoversSweepParameters) {
    const CalibrationResult cal =
        calibrate_constants(variant_a(), default_suite(), default_calibration_points());
    EXPECT_EQ(cal.config.provenance, "calibrated:variant-A:suite_v1");
    EXPECT_EQ(cal.config.phase_sparsity_threshold, 0.12);
    EXPECT_EQ(cal.config.amplitude_mean_threshold, 0.13);
    const FingerprintMatrix f = exact_fingerprint("builtin:variant-A", ChannelKind::PhaseDamping, 0.08);
    const double lambda = estimate_parameter(NoiseLabel::PhaseDamping, extract_features(f.deviations), cal.config);
    EXPECT_NEAR(lambda, 0.08, 1e-12);
    for (const auto& fit : cal.fits) EXPECT_TRUE(fit.fitted) << to_string(fit.label);
    // Defaults untouched.
    EXPECT_EQ(AnalysisConfig{}.c_phase, 0.094);
    EXPECT_EQ(AnalysisConfig{}.provenance, "default");
}

TEST(Analysis, DegenerateCalibrationKeepsBaseConstant) {
    // On variant-B the variance pattern alone exceeds 2 gamma, so no positive
    // C_amp fits the amplitude-damping sweep.
    const CalibrationResult cal = calibrate_constants(variant_b(), default_suite(), default_calibration_points());
    EXPECT_EQ(cal.config.c_amp, AnalysisConfig{}.c_amp);
    EXPECT_EQ(cal.config.provenance, "calibrated:variant-B:suite_v1 (kept c_amp)");
    for (const auto& fit : cal.fits) EXPECT_EQ(fit.fitted, fit.label != NoiseLabel::AmplitudeDamping);
}

TEST(AnalysisProperty, FrobeniusIsAMetric) {
    sptest::Gen gen(99);
    auto random = [&gen]() {
        RealMatrix m(9, 15);
        for (double& v : m.values()) v = gen.uniform(-2.0, 2.0);
        return m;
    };
    for (int trial = 0; trial < 1000; ++trial) {
        const RealMatrix a = random();
        const RealMatrix b = random();
        const RealMatrix c = random();
        const double ab = frobenius_distance(a, b);
        EXPECT_EQ(ab, frobenius_distance(b, a));
        EXPECT_GE(ab, 0.0);
        EXPECT_EQ(frobenius_distance(a, a), 0.0);
        EXPECT_LE(frobenius_distance(a, c), ab + frobenius_distance(b, c) + 1e-12);
    }
}

TEST(AnalysisProperty, FeatureBoundsAndPermutationStableLabels) {
    sptest::Gen gen(31);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t rows = 1 + gen.index(9);
        const std::size_t cols = 1 + gen.index(15);
        RealMatrix m(rows, cols);
        const double scale = gen.uniform(0.0, 0.5);
        for (double& v : m.values()) v = gen.coin() ? 0.0 : gen.uniform(-scale, scale) + gen.uniform(-0.2, 0.2) * 0.5;
        const FeatureVector fv = extract_features(m);
        EXPECT_GE(fv.sparsity, 0.0);
        EXPECT_LE(fv.sparsity, 1.0);
        EXPECT_GE(fv.max_abs_dev, 0.0);
        EXPECT_GE(fv.frobenius_norm + 1e-15, fv.max_abs_dev);

        // Permute rows and columns; the features and the label must not move.
        std::vector<std::size_t> rp(rows), cp(cols);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        for (std::size_t i = rows; i > 1; --i) std::swap(rp[i - 1], rp[gen.index(i)]);
        for (std::size_t i = cols; i > 1; --i) std::swap(cp[i - 1], cp[gen.index(i)]);
        RealMatrix p(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) p(r, c) = m(rp[r], cp[c]);
        const FeatureVector pv = extract_features(p);
        EXPECT_EQ(classify(fv), classify(pv));
        EXPECT_NEAR(fv.mean_dev, pv.mean_dev, 1e-12);
        EXPECT_NEAR(fv.variance_pattern, pv.variance_pattern, 1e-12);
        EXPECT_EQ(classify(fv), classify(fv));
    }
}
