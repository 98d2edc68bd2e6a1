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

#include "shadowprint/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "shadowprint/error.hpp"

namespace shadowprint {

std::string_view to_string(NoiseLabel label) {
    switch (label) {
        case NoiseLabel::PhaseDamping:
            return "phase_damping";
        case NoiseLabel::AmplitudeDamping:
            return "amplitude_damping";
        case NoiseLabel::Depolarizing:
            return "depolarizing";
    }
    return "unknown";
}

std::optional<NoiseLabel> parse_noise_label(std::string_view name) {
    for (auto l : {NoiseLabel::PhaseDamping, NoiseLabel::AmplitudeDamping, NoiseLabel::Depolarizing}) {
        if (name == to_string(l)) return l;
    }
    return std::nullopt;
}

namespace {

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

template <typename Range>
Moments population_moments(const Range& values) {
    Moments m;
    std::size_t count = 0;
    for (double v : values) {
        m.mean += v;
        ++count;
    }
    if (count == 0) return m;
    m.mean /= static_cast<double>(count);
    for (double v : values) {
        m.variance += (v - m.mean) * (v - m.mean);
    }
    m.variance /= static_cast<double>(count);
    return m;
}

}  // namespace

FeatureVector extract_features(const RealMatrix& f, double sparsity_tau) {
    if (f.empty()) {
        throw InvalidInput("cannot extract features from an empty matrix");
    }
    FeatureVector fv;
    const Moments all = population_moments(f.values());
    fv.mean_dev = all.mean;
    fv.std_dev = std::sqrt(all.variance);

    double sum_sq = 0.0;
    std::size_t small = 0;
    for (double v : f.values()) {
        sum_sq += v * v;
        fv.max_abs_dev = std::max(fv.max_abs_dev, std::abs(v));
        if (std::abs(v) < sparsity_tau) ++small;
    }
    fv.frobenius_norm = std::sqrt(sum_sq);
    fv.sparsity = static_cast<double>(small) / static_cast<double>(f.size());

    std::vector<double> column_variances(f.cols());
    std::vector<double> column(f.rows());
    for (std::size_t c = 0; c < f.cols(); ++c) {
        for (std::size_t r = 0; r < f.rows(); ++r) column[r] = f(r, c);
        column_variances[c] = population_moments(column).variance;
    }
    fv.variance_pattern = population_moments(column_variances).variance;
    return fv;
}

NoiseLabel classify(const FeatureVector& fv, const AnalysisConfig& config) {
    if (fv.sparsity > config.phase_sparsity_threshold) return NoiseLabel::PhaseDamping;
    if (std::abs(fv.mean_dev) > config.amplitude_mean_threshold) return NoiseLabel::AmplitudeDamping;
    return NoiseLabel::Depolarizing;
}

double estimate_parameter(NoiseLabel label, const FeatureVector& fv, const AnalysisConfig& config) {
    double estimate = 0.0;
    switch (label) {
        case NoiseLabel::Depolarizing:
            estimate = std::abs(fv.mean_dev) / config.c_dep;
            break;
        case NoiseLabel::AmplitudeDamping:
            estimate = 0.5 * (std::abs(fv.mean_dev) / config.c_amp + fv.variance_pattern / config.amp_variance_scale);
            break;
        case NoiseLabel::PhaseDamping:
            estimate = (1.0 - fv.sparsity) * config.c_phase;
            break;
    }
    return std::clamp(estimate, 0.0, 1.0);
}

NoiseDiagnosis diagnose(const RealMatrix& deviations, const AnalysisConfig& config) {
    NoiseDiagnosis d;
    d.features = extract_features(deviations, config.sparsity_tau);
    d.label = classify(d.features, config);
    d.estimated_parameter = estimate_parameter(d.label, d.features, config);
    d.config = config;
    return d;
}

double frobenius_distance(const RealMatrix& a, const RealMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInput("cannot compare " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                           std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " matrices");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a.values()[i] - b.values()[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

namespace {

void require_same_suite(const FingerprintMatrix& a, const FingerprintMatrix& b) {
    if (a.suite.version != b.suite.version) {
        throw SuiteMismatch("fingerprints use different suites ('" + a.suite.version + "' vs '" + b.suite.version +
                            "') and are not comparable");
    }
    if (!(a.suite == b.suite)) {
        throw SuiteMismatch("fingerprints share suite version '" + a.suite.version +
                            "' but their states or observables differ");
    }
}

}  // namespace

double frobenius_distance(const FingerprintMatrix& a, const FingerprintMatrix& b) {
    require_same_suite(a, b);
    return frobenius_distance(a.deviations, b.deviations);
}

double noise_floor(std::size_t num_entries, std::uint64_t shots) {
    if (num_entries == 0 || shots == 0) {
        throw InvalidInput("noise floor needs at least one entry and one shot");
    }
    return std::sqrt(static_cast<double>(num_entries) * 2.0 / static_cast<double>(shots));
}

ComparisonReport compare_fingerprints(const FingerprintMatrix& a, const FingerprintMatrix& b) {
    ComparisonReport report;
    report.distance = frobenius_distance(a, b);
    report.difference = a.deviations - b.deviations;
    const auto inverse = [](const std::optional<std::uint32_t>& shots) {
        return shots ? 1.0 / static_cast<double>(*shots) : 0.0;
    };
    const double entries = static_cast<double>(report.difference.size());
    report.noise_floor = std::sqrt(entries * (inverse(a.metadata.shots) + inverse(b.metadata.shots)));
    if (report.noise_floor > 0.0) {
        report.ratio = report.distance / report.noise_floor;
        report.systematic = *report.ratio > kSystematicRatio;
    } else {
        report.systematic = report.distance > 1e-12;
    }
    return report;
}

std::vector<CalibrationPoint> default_calibration_points() {
    return {{ChannelKind::Depolarizing, 0.05}, {ChannelKind::AmplitudeDamping, 0.10}, {ChannelKind::PhaseDamping, 0.08}};
}

namespace {

/// Least-squares slope of y = a x through the origin.
std::optional<double> fit_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
    }
    if (sxx <= 0.0 || sxy <= 0.0) return std::nullopt;
    return sxy / sxx;
}

}  // namespace

CalibrationResult calibrate_constants(const VariantProfile& profile, const ReferenceSuite& suite,
                                      const std::vector<CalibrationPoint>& points, const AnalysisConfig& base) {
    CalibrationResult result;
    result.config = base;
    result.config.provenance = "calibrated:" + profile.name + ":" + suite.version;
    std::vector<std::string> kept;

    for (auto label : {NoiseLabel::Depolarizing, NoiseLabel::AmplitudeDamping, NoiseLabel::PhaseDamping}) {
        const ChannelKind kind = label == NoiseLabel::Depolarizing       ? ChannelKind::Depolarizing
                                 : label == NoiseLabel::AmplitudeDamping ? ChannelKind::AmplitudeDamping
                                                                         : ChannelKind::PhaseDamping;
        CalibrationFit fit{label, false, 0.0, {}, {}};
        std::vector<double> x;
        std::vector<double> y;
        for (const auto& point : points) {
            if (point.kind != kind) continue;
            BuiltinBackend backend(profile, {kind, point.parameter});
            BackendSpec spec;
            spec.profile = profile;
            spec.channel = {kind, point.parameter};
            const FingerprintMatrix f = build_fingerprint(backend, spec, suite, ShotPlan::exact_mode());
            const FeatureVector fv = extract_features(f.deviations, base.sparsity_tau);
            fit.features.push_back(fv);
            fit.parameters.push_back(point.parameter);
            switch (label) {
                case NoiseLabel::Depolarizing:
                    // p = |mu| (1/C_dep)
                    x.push_back(std::abs(fv.mean_dev));
                    y.push_back(point.parameter);
                    break;
                case NoiseLabel::AmplitudeDamping:
                    // 2 gamma - vp/scale = |mu| (1/C_amp)
                    x.push_back(std::abs(fv.mean_dev));
                    y.push_back(2.0 * point.parameter - fv.variance_pattern / base.amp_variance_scale);
                    break;
                case NoiseLabel::PhaseDamping:
                    // lambda = (1 - s) C_phase
                    x.push_back(1.0 - fv.sparsity);
                    y.push_back(point.parameter);
                    break;
            }
        }
        if (x.empty()) continue;
        const auto slope = fit_through_origin(x, y);
        if (!slope) {
            kept.push_back(label == NoiseLabel::Depolarizing       ? "c_dep"
                           : label == NoiseLabel::AmplitudeDamping ? "c_amp"
                                                                   : "c_phase");
            result.fits.push_back(std::move(fit));
            continue;
        }
        fit.fitted = true;
        switch (label) {
            case NoiseLabel::Depolarizing:
                result.config.c_dep = fit.constant = 1.0 / *slope;
                break;
            case NoiseLabel::AmplitudeDamping:
                result.config.c_amp = fit.constant = 1.0 / *slope;
                break;
            case NoiseLabel::PhaseDamping:
                result.config.c_phase = fit.constant = *slope;
                break;
        }
        result.fits.push_back(std::move(fit));
    }
    if (!kept.empty()) {
        result.config.provenance += " (kept";
        for (const auto& name : kept) result.config.provenance += " " + name;
        result.config.provenance += ")";
    }
    return result;
}

}  // namespace shadowprint
