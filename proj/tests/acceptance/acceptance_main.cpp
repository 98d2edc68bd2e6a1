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

// Acceptance suite: one PASS/FAIL line per primary criterion, followed by
// informational "INFO" lines. Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "shadowprint/analysis.hpp"
#include "shadowprint/backend.hpp"
#include "shadowprint/channels.hpp"
#include "shadowprint/cost.hpp"
#include "shadowprint/estimation.hpp"
#include "shadowprint/fingerprint.hpp"
#include "shadowprint/heatmap.hpp"
#include "test_support.hpp"

using namespace shadowprint;

namespace {

constexpr std::uint32_t kShots = 500;

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<Outcome()> body;
};

std::vector<std::string> g_info;

void info(const std::string& line) { g_info.push_back(line); }

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

FingerprintMatrix fingerprint(const char* backend, ChannelKind kind, double param, std::optional<std::uint32_t> shots,
                              std::uint64_t seed) {
    const ShotPlan plan = shots ? ShotPlan::sampled(*shots, seed) : ShotPlan::exact_mode(seed);
    return build_fingerprint(parse_backend_spec(backend, {kind, param}), default_suite(), plan);
}

Outcome cptp_and_analytics() {
    std::ostringstream d;
    bool ok = true;
    double worst_residual = 0.0;
    for (const auto& ch : {make_depolarizing(0.05, DepolarizingVariant::IdentityMix),
                           make_depolarizing(0.05, DepolarizingVariant::PauliMix), make_amplitude_damping(0.10),
                           make_phase_damping(0.08)}) {
        const CptpCheck c = verify_cptp(ch);
        ok = ok && c.ok && c.residual <= 1e-12;
        worst_residual = std::max(worst_residual, c.residual);
    }
    const double h = 1.0 / std::sqrt(2.0);
    const DensityMatrix zero = DensityMatrix::ground(1);
    const DensityMatrix one = DensityMatrix::from_ket(ComplexMatrix(2, 1, {0.0, 1.0}));
    const DensityMatrix plus = DensityMatrix::from_ket(ComplexMatrix(2, 1, {h, h}));
    const PauliString z("Z"), x("X");
    const double p = 0.05, g = 0.10, l = 0.08;
    const std::vector<std::pair<double, double>> checks = {
        {exact_expectation(apply_channel(zero, make_depolarizing(p, DepolarizingVariant::IdentityMix), 0), z), 1 - p},
        {exact_expectation(apply_channel(zero, make_depolarizing(p, DepolarizingVariant::PauliMix), 0), z),
         1 - 4 * p / 3},
        {exact_expectation(apply_channel(one, make_amplitude_damping(g), 0), z), 2 * g - 1},
        {exact_expectation(apply_channel(plus, make_phase_damping(l), 0), x), std::sqrt(1 - l)},
    };
    double worst_err = 0.0;
    for (auto [got, want] : checks) worst_err = std::max(worst_err, std::abs(got - want));
    ok = ok && worst_err <= 1e-12;
    d << "max_residual=" << fmt("%.3g", worst_residual) << " max_analytic_error=" << fmt("%.3g", worst_err)
      << " tol=1e-12";
    return {ok, d.str()};
}

Outcome noise_floor_formula() {
    const double v = noise_floor(135, kShots);
    return {std::abs(v - 0.7348) <= 1e-4, "noise_floor(135,500)=" + fmt("%.6f", v) + " target=0.7348+-0.0001"};
}

Outcome noiseless_fingerprint() {
    const double limit = 2.0 * 0.7348;
    int ok = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const FingerprintMatrix f = fingerprint("builtin:variant-A", ChannelKind::Identity, 0.0, kShots, seed);
        const double norm = extract_features(f.deviations).frobenius_norm;
        worst = std::max(worst, norm);
        ok += norm <= limit ? 1 : 0;
    }
    const FingerprintMatrix b = fingerprint("builtin:variant-B", ChannelKind::Identity, 0.0, std::nullopt, 0);
    info("variant-B identity exact ||F||=" + fmt("%.4f", extract_features(b.deviations).frobenius_norm) +
         " (qubit-order gap, not shot noise)");
    return {ok >= 99, "variant-A seeds_within=" + std::to_string(ok) + "/100 max_norm=" + fmt("%.4f", worst) +
                          " limit=" + fmt("%.4f", limit)};
}

Outcome systematicity() {
    const double floor = noise_floor(135, kShots);
    int ok = 0;
    double min_cross = 1e9, max_same = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto a1 = fingerprint("builtin:variant-A", ChannelKind::Depolarizing, 0.05, kShots, 2 * i + 1000);
        const auto a2 = fingerprint("builtin:variant-A", ChannelKind::Depolarizing, 0.05, kShots, 2 * i + 1001);
        const auto b1 = fingerprint("builtin:variant-B", ChannelKind::Depolarizing, 0.05, kShots, 2 * i + 5000);
        const auto b2 = fingerprint("builtin:variant-B", ChannelKind::Depolarizing, 0.05, kShots, 2 * i + 5001);
        const double cross = frobenius_distance(a1, b1);
        const double same_a = frobenius_distance(a1, a2);
        const double same_b = frobenius_distance(b1, b2);
        min_cross = std::min(min_cross, cross);
        max_same = std::max({max_same, same_a, same_b});
        ok += (cross > 3 * floor && same_a < 2 * floor && same_b < 2 * floor) ? 1 : 0;
    }
    const double exact = frobenius_distance(
        fingerprint("builtin:variant-A", ChannelKind::Depolarizing, 0.05, std::nullopt, 0),
        fingerprint("builtin:variant-B", ChannelKind::Depolarizing, 0.05, std::nullopt, 0));
    info("variant-A vs variant-B exact distance=" + fmt("%.4f", exact) + " (" + fmt("%.2f", exact / floor) +
         "x floor)");
    return {ok >= 95, "pairs_ok=" + std::to_string(ok) + "/100 min_cross=" + fmt("%.3f", min_cross) +
                          " (>" + fmt("%.3f", 3 * floor) + ") max_same=" + fmt("%.3f", max_same) + " (<" +
                          fmt("%.3f", 2 * floor) + ")"};
}

Outcome exact_classification() {
    std::ostringstream d;
    bool phase_ok = true;
    bool dep_any = false;
    bool deterministic = true;
    for (const char* b : {"builtin:variant-A", "builtin:variant-B"}) {
        const FeatureVector pf =
            extract_features(fingerprint(b, ChannelKind::PhaseDamping, 0.08, std::nullopt, 0).deviations);
        const FeatureVector df =
            extract_features(fingerprint(b, ChannelKind::Depolarizing, 0.05, std::nullopt, 0).deviations);
        const NoiseLabel pl = classify(pf);
        const NoiseLabel dl = classify(df);
        deterministic = deterministic && classify(pf) == pl && classify(df) == dl &&
                        classify(extract_features(fingerprint(b, ChannelKind::PhaseDamping, 0.08, std::nullopt, 0)
                                                      .deviations)) == pl;
        phase_ok = phase_ok && pl == NoiseLabel::PhaseDamping;
        dep_any = dep_any || dl == NoiseLabel::Depolarizing;
        d << std::string(b).substr(8) << ":phase->" << to_string(pl) << "(s=" << fmt("%.3f", pf.sparsity) << ") dep->"
          << to_string(dl) << "(s=" << fmt("%.3f", df.sparsity) << ",mu=" << fmt("%.4f", df.mean_dev) << ") ";

        const FeatureVector sf =
            extract_features(fingerprint(b, ChannelKind::Depolarizing, 0.05, kShots, 1).deviations);
        info(std::string(b) + " depolarizing 0.05 at 500 shots classifies as " + std::string(to_string(classify(sf))) +
             " (s=" + fmt("%.3f", sf.sparsity) + ")");
    }
    d << "phase_both=" << (phase_ok ? "yes" : "no") << " dep_any=" << (dep_any ? "yes" : "no")
      << " deterministic=" << (deterministic ? "yes" : "no");
    return {phase_ok && dep_any && deterministic, d.str()};
}

Outcome parameter_estimation() {
    const FeatureVector fv =
        extract_features(fingerprint("builtin:variant-A", ChannelKind::PhaseDamping, 0.08, std::nullopt, 0).deviations);
    const AnalysisConfig defaults;
    const double raw = estimate_parameter(NoiseLabel::PhaseDamping, fv, defaults);
    const CalibrationResult cal = calibrate_constants(variant_a(), default_suite(), default_calibration_points());
    const double fitted = estimate_parameter(NoiseLabel::PhaseDamping, fv, cal.config);
    const double err = std::abs(fitted - 0.08) / 0.08;
    info("default constants: lambda_hat=" + fmt("%.6f", raw) + " rel_error=" + fmt("%.4f", std::abs(raw - 0.08) / 0.08) +
         " C_phase=" + fmt("%.3f", defaults.c_phase) + " provenance=" + defaults.provenance);
    return {err <= 0.03, "lambda_hat=" + fmt("%.6f", fitted) + " rel_error=" + fmt("%.2e", err) +
                             " C_phase=" + fmt("%.6f", cal.config.c_phase) + " provenance=" + cal.config.provenance};
}

Outcome scaling_report() {
    const double tomo = to_double(tomography_cost(8, kShots));
    const double ratio = tomo / static_cast<double>(kReferenceShadowMeasurements);
    const std::string shadow2 = to_decimal(shadow_cost(2, kShots));
    const bool ok = tomo >= 2.1e12 && tomo <= 2.2e12 && ratio >= 2.4e6 && ratio <= 2.6e6 && shadow2 == "67500";
    return {ok, "tomography(8,500)=" + to_decimal(tomography_cost(8, kShots)) + " ratio_vs_864000=" +
                    fmt("%.4g", ratio) + " shadow(2,500)=" + shadow2};
}

Outcome determinism() {
    sptest::TempDir dir;
    const std::string cli = SHADOWPRINT_CLI;
    auto run = [&](const std::string& tag) {
        return sptest::run_process(cli + " fingerprint --backend builtin:variant-B --channel depolarizing --param 0.05"
                                         " --shots 500 --seed 42 --out '" +
                                   dir.file(tag + ".json") + "' --heatmap '" + dir.file(tag + ".svg") + "'")
            .exit_code;
    };
    const bool ran = run("a") == 0 && run("b") == 0;
    const std::string ja = sptest::slurp(dir.file("a.json")), jb = sptest::slurp(dir.file("b.json"));
    const std::string sa = sptest::slurp(dir.file("a.svg")), sb = sptest::slurp(dir.file("b.svg"));
    const FingerprintMatrix f = fingerprint("builtin:variant-A", ChannelKind::AmplitudeDamping, 0.1, kShots, 3);
    const bool svg_pure = render_heatmap_svg(fingerprint_heatmap(f, "F")) == render_heatmap_svg(fingerprint_heatmap(f, "F"));
    const bool ok = ran && !ja.empty() && ja == jb && !sa.empty() && sa == sb && svg_pure;
    return {ok, "cli_runs=" + std::string(ran ? "ok" : "failed") + " json_identical=" + (ja == jb ? "yes" : "no") +
                    " (" + std::to_string(ja.size()) + " bytes) svg_identical=" + (sa == sb && svg_pure ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"cptp_and_channel_analytics", 1.0, cptp_and_analytics},
        {"noise_floor_formula", 1.0, noise_floor_formula},
        {"noiseless_fingerprint", 60.0, noiseless_fingerprint},
        {"systematicity_detection", 300.0, systematicity},
        {"exact_mode_classification", 10.0, exact_classification},
        {"parameter_estimation", 10.0, parameter_estimation},
        {"scaling_report", 1.0, scaling_report},
        {"determinism", 60.0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = secs <= c.budget_seconds;
        const bool passed = o.passed && in_budget;
        failures += passed ? 0 : 1;
        std::printf("%s %-28s %s [%.2fs/%.0fs%s]\n", passed ? "PASS" : "FAIL", c.name.c_str(), o.detail.c_str(), secs,
                    c.budget_seconds, in_budget ? "" : " over budget");
        std::fflush(stdout);
    }
    for (const auto& line : g_info) std::printf("INFO %s\n", line.c_str());
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
