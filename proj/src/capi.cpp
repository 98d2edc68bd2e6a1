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

#include "shadowprint/shadowprint.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "shadowprint/analysis.hpp"
#include "shadowprint/bridge.hpp"
#include "shadowprint/cost.hpp"
#include "shadowprint/error.hpp"
#include "shadowprint/formats.hpp"
#include "shadowprint/heatmap.hpp"

struct sp_suite {
    shadowprint::ReferenceSuite suite;
};

struct sp_fingerprint {
    shadowprint::FingerprintMatrix matrix;
};

namespace {

thread_local std::string g_last_error;

sp_status status_for(shadowprint::ErrorKind kind) {
    using shadowprint::ErrorKind;
    switch (kind) {
        case ErrorKind::InvalidInput:
            return SP_ERR_INVALID_ARGUMENT;
        case ErrorKind::SuiteMismatch:
            return SP_ERR_SUITE_MISMATCH;
        case ErrorKind::Backend:
            return SP_ERR_BACKEND;
        case ErrorKind::NumericalIntegrity:
            return SP_ERR_NUMERICAL;
        case ErrorKind::Io:
            return SP_ERR_IO;
        case ErrorKind::Parse:
            return SP_ERR_PARSE;
    }
    return SP_ERR_INTERNAL;
}

template <typename Fn>
sp_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SP_OK;
    } catch (const shadowprint::Error& e) {
        g_last_error = e.what();
        return status_for(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SP_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SP_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) {
        throw shadowprint::InvalidInput(std::string(what) + " must not be NULL");
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

shadowprint::AnalysisConfig from_c(const sp_analysis_config& c) {
    shadowprint::AnalysisConfig cfg;
    cfg.sparsity_tau = c.sparsity_tau;
    cfg.phase_sparsity_threshold = c.phase_sparsity_threshold;
    cfg.amplitude_mean_threshold = c.amplitude_mean_threshold;
    cfg.c_dep = c.c_dep;
    cfg.c_amp = c.c_amp;
    cfg.amp_variance_scale = c.amp_variance_scale;
    cfg.c_phase = c.c_phase;
    cfg.provenance = std::string(c.provenance, strnlen(c.provenance, sizeof c.provenance));
    return cfg;
}

void to_c(const shadowprint::AnalysisConfig& cfg, sp_analysis_config* c) {
    c->sparsity_tau = cfg.sparsity_tau;
    c->phase_sparsity_threshold = cfg.phase_sparsity_threshold;
    c->amplitude_mean_threshold = cfg.amplitude_mean_threshold;
    c->c_dep = cfg.c_dep;
    c->c_amp = cfg.c_amp;
    c->amp_variance_scale = cfg.amp_variance_scale;
    c->c_phase = cfg.c_phase;
    std::snprintf(c->provenance, sizeof c->provenance, "%s", cfg.provenance.c_str());
}

sp_features to_c(const shadowprint::FeatureVector& f) {
    return {f.mean_dev, f.std_dev, f.frobenius_norm, f.sparsity, f.max_abs_dev, f.variance_pattern};
}

shadowprint::FeatureVector from_c(const sp_features& f) {
    return {f.mean_dev, f.std_dev, f.frobenius_norm, f.sparsity, f.max_abs_dev, f.variance_pattern};
}

sp_noise_label to_c(shadowprint::NoiseLabel l) {
    switch (l) {
        case shadowprint::NoiseLabel::PhaseDamping:
            return SP_LABEL_PHASE_DAMPING;
        case shadowprint::NoiseLabel::AmplitudeDamping:
            return SP_LABEL_AMPLITUDE_DAMPING;
        case shadowprint::NoiseLabel::Depolarizing:
            return SP_LABEL_DEPOLARIZING;
    }
    return SP_LABEL_DEPOLARIZING;
}

shadowprint::NoiseLabel from_c(sp_noise_label l) {
    switch (l) {
        case SP_LABEL_PHASE_DAMPING:
            return shadowprint::NoiseLabel::PhaseDamping;
        case SP_LABEL_AMPLITUDE_DAMPING:
            return shadowprint::NoiseLabel::AmplitudeDamping;
        case SP_LABEL_DEPOLARIZING:
            return shadowprint::NoiseLabel::Depolarizing;
    }
    throw shadowprint::InvalidInput("unknown noise label");
}

}  // namespace

extern "C" {

const char* sp_version(void) { return "1.0.0"; }

const char* sp_last_error(void) { return g_last_error.c_str(); }

const char* sp_status_name(sp_status status) {
    switch (status) {
        case SP_OK:
            return "ok";
        case SP_ERR_INVALID_ARGUMENT:
            return "invalid_argument";
        case SP_ERR_SUITE_MISMATCH:
            return "suite_mismatch";
        case SP_ERR_BACKEND:
            return "backend_error";
        case SP_ERR_NUMERICAL:
            return "numerical_integrity";
        case SP_ERR_IO:
            return "io_error";
        case SP_ERR_PARSE:
            return "parse_error";
        case SP_ERR_INTERNAL:
            return "internal_error";
    }
    return "unknown";
}

void sp_string_free(char* s) { std::free(s); }

sp_status sp_suite_default(sp_suite** out) {
    return guarded([&] {
        require(out, "out");
        *out = new sp_suite{shadowprint::default_suite()};
    });
}

sp_status sp_suite_load(const char* path, sp_suite** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new sp_suite{shadowprint::read_suite_file(path)};
    });
}

void sp_suite_free(sp_suite* suite) { delete suite; }

sp_status sp_suite_to_json(const sp_suite* suite, char** out_json) {
    return guarded([&] {
        require(suite, "suite");
        require(out_json, "out_json");
        *out_json = duplicate(shadowprint::suite_to_json(suite->suite));
    });
}

size_t sp_suite_num_states(const sp_suite* suite) { return suite ? suite->suite.states.size() : 0; }

size_t sp_suite_num_observables(const sp_suite* suite) { return suite ? suite->suite.observables.size() : 0; }

void sp_fingerprint_options_init(sp_fingerprint_options* options) {
    if (options == nullptr) return;
    options->backend = "builtin:variant-A";
    options->channel = "identity";
    options->parameter = 0.0;
    options->shots = 500;
    options->seed = 0;
    options->suite = nullptr;
    options->timestamp = nullptr;
    options->timeout_ms = 30000;
}

sp_status sp_fingerprint_build(const sp_fingerprint_options* options, sp_fingerprint** out) {
    return guarded([&] {
        require(options, "options");
        require(out, "out");
        require(options->backend, "options->backend");
        require(options->channel, "options->channel");
        const auto kind = shadowprint::parse_channel_kind(options->channel);
        if (!kind) {
            throw shadowprint::InvalidInput(std::string("unknown channel '") + options->channel + "'");
        }
        shadowprint::BackendSpec spec =
            shadowprint::parse_backend_spec(options->backend, {*kind, options->parameter});
        if (options->timeout_ms > 0) {
            spec.request_timeout = std::chrono::milliseconds(options->timeout_ms);
        }
        const shadowprint::ReferenceSuite suite =
            options->suite ? options->suite->suite : shadowprint::default_suite();
        const shadowprint::ShotPlan plan = options->shots == 0
                                               ? shadowprint::ShotPlan::exact_mode(options->seed)
                                               : shadowprint::ShotPlan::sampled(options->shots, options->seed);
        auto fp = std::make_unique<sp_fingerprint>();
        fp->matrix = shadowprint::build_fingerprint(spec, suite, plan);
        if (options->timestamp != nullptr) {
            fp->matrix.metadata.timestamp = options->timestamp;
        }
        *out = fp.release();
    });
}

sp_status sp_fingerprint_read(const char* path, sp_fingerprint** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new sp_fingerprint{shadowprint::read_fingerprint_file(path)};
    });
}

sp_status sp_fingerprint_write(const sp_fingerprint* fp, const char* path) {
    return guarded([&] {
        require(fp, "fp");
        require(path, "path");
        shadowprint::write_fingerprint_file(fp->matrix, path);
    });
}

sp_status sp_fingerprint_to_json(const sp_fingerprint* fp, char** out_json) {
    return guarded([&] {
        require(fp, "fp");
        require(out_json, "out_json");
        *out_json = duplicate(shadowprint::fingerprint_to_json(fp->matrix));
    });
}

void sp_fingerprint_free(sp_fingerprint* fp) { delete fp; }

sp_status sp_fingerprint_shape(const sp_fingerprint* fp, size_t* rows, size_t* cols) {
    return guarded([&] {
        require(fp, "fp");
        if (rows) *rows = fp->matrix.k();
        if (cols) *cols = fp->matrix.n();
    });
}

sp_status sp_fingerprint_deviations(const sp_fingerprint* fp, double* out, size_t len) {
    return guarded([&] {
        require(fp, "fp");
        require(out, "out");
        const auto values = fp->matrix.deviations.values();
        if (len < values.size()) {
            throw shadowprint::InvalidInput("output buffer holds " + std::to_string(len) + " values, need " +
                                            std::to_string(values.size()));
        }
        std::copy(values.begin(), values.end(), out);
    });
}

sp_status sp_fingerprint_render_heatmap(const sp_fingerprint* fp, const char* path) {
    return guarded([&] {
        require(fp, "fp");
        require(path, "path");
        const auto& md = fp->matrix.metadata;
        char title[256];
        std::snprintf(title, sizeof title, "F: %s, %s %.4g", md.backend_id.c_str(),
                      std::string(shadowprint::to_string(md.channel.kind)).c_str(), md.channel.parameter);
        shadowprint::render_heatmap(shadowprint::fingerprint_heatmap(fp->matrix, title), path);
    });
}

void sp_analysis_config_default(sp_analysis_config* config) {
    if (config == nullptr) return;
    to_c(shadowprint::AnalysisConfig{}, config);
}

sp_status sp_calibrate(const char* profile, const sp_suite* suite, sp_analysis_config* config) {
    return guarded([&] {
        require(profile, "profile");
        require(config, "config");
        const auto vp = shadowprint::builtin_profile(profile);
        if (!vp) {
            throw shadowprint::InvalidInput(std::string("unknown builtin profile '") + profile + "'");
        }
        const auto result = shadowprint::calibrate_constants(
            *vp, suite ? suite->suite : shadowprint::default_suite(), shadowprint::default_calibration_points(),
            from_c(*config));
        to_c(result.config, config);
    });
}

sp_status sp_diagnose(const sp_fingerprint* fp, const sp_analysis_config* config, sp_diagnosis* out) {
    return guarded([&] {
        require(fp, "fp");
        require(out, "out");
        const shadowprint::AnalysisConfig cfg = config ? from_c(*config) : shadowprint::AnalysisConfig{};
        const auto d = shadowprint::diagnose(fp->matrix.deviations, cfg);
        out->label = to_c(d.label);
        out->estimated_parameter = d.estimated_parameter;
        out->features = to_c(d.features);
    });
}

sp_status sp_diagnosis_format(const sp_diagnosis* diagnosis, const sp_analysis_config* config, char** out_text) {
    return guarded([&] {
        require(diagnosis, "diagnosis");
        require(out_text, "out_text");
        shadowprint::NoiseDiagnosis d;
        d.label = from_c(diagnosis->label);
        d.estimated_parameter = diagnosis->estimated_parameter;
        d.features = from_c(diagnosis->features);
        d.config = config ? from_c(*config) : shadowprint::AnalysisConfig{};
        *out_text = duplicate(shadowprint::format_diagnosis(d));
    });
}

const char* sp_noise_label_name(sp_noise_label label) {
    switch (label) {
        case SP_LABEL_PHASE_DAMPING:
            return "phase_damping";
        case SP_LABEL_AMPLITUDE_DAMPING:
            return "amplitude_damping";
        case SP_LABEL_DEPOLARIZING:
            return "depolarizing";
    }
    return "unknown";
}

sp_status sp_compare(const sp_fingerprint* a, const sp_fingerprint* b, sp_comparison* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        const auto report = shadowprint::compare_fingerprints(a->matrix, b->matrix);
        out->distance = report.distance;
        out->noise_floor = report.noise_floor;
        out->has_ratio = report.ratio.has_value() ? 1 : 0;
        out->ratio = report.ratio.value_or(0.0);
        out->systematic = report.systematic ? 1 : 0;
    });
}

sp_status sp_compare_report_json(const sp_fingerprint* a, const sp_fingerprint* b, char** out_json) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out_json, "out_json");
        const auto report = shadowprint::compare_fingerprints(a->matrix, b->matrix);
        *out_json = duplicate(shadowprint::comparison_to_json(a->matrix, b->matrix, report));
    });
}

sp_status sp_render_difference_heatmap(const sp_fingerprint* a, const sp_fingerprint* b, const char* path) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(path, "path");
        const auto report = shadowprint::compare_fingerprints(a->matrix, b->matrix);
        shadowprint::HeatmapSpec spec = shadowprint::fingerprint_heatmap(a->matrix, "");
        spec.matrix = report.difference;
        char title[512];
        std::snprintf(title, sizeof title, "Delta = F(%s) - F(%s), ||Delta||_F = %.4g",
                      a->matrix.metadata.backend_id.c_str(), b->matrix.metadata.backend_id.c_str(), report.distance);
        spec.title = title;
        shadowprint::render_heatmap(spec, path);
    });
}

sp_status sp_noise_floor(size_t num_entries, uint64_t shots, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = shadowprint::noise_floor(num_entries, shots);
    });
}

sp_status sp_cost_row_compute(unsigned qubits, uint64_t shots, sp_cost_row* out) {
    return guarded([&] {
        require(out, "out");
        const auto r = shadowprint::cost_report(qubits, shots);
        out->qubits = r.qubits;
        out->shadow_measurements = shadowprint::to_double(r.shadow_measurements);
        out->tomography_measurements = shadowprint::to_double(r.tomography_measurements);
        out->ratio = r.ratio;
        std::snprintf(out->shadow_decimal, sizeof out->shadow_decimal, "%s",
                      shadowprint::to_decimal(r.shadow_measurements).c_str());
        std::snprintf(out->tomography_decimal, sizeof out->tomography_decimal, "%s",
                      shadowprint::to_decimal(r.tomography_measurements).c_str());
    });
}

sp_status sp_scaling_report(unsigned max_qubits, uint64_t shots, int format, char** out_text) {
    return guarded([&] {
        require(out_text, "out_text");
        const auto rows = shadowprint::scaling_series(max_qubits, shots);
        *out_text = duplicate(shadowprint::format_scaling(
            rows, shots, format == 1 ? shadowprint::TableFormat::Csv : shadowprint::TableFormat::Table));
    });
}

sp_status sp_bridge_conformance(const char* command, uint32_t shots, uint32_t timeout_ms, char** out_report,
                                int* all_passed) {
    return guarded([&] {
        require(command, "command");
        require(out_report, "out_report");
        if (shots == 0) {
            throw shadowprint::InvalidInput("conformance needs at least one shot");
        }
        const auto checks =
            shadowprint::run_conformance(command, shots, std::chrono::milliseconds(timeout_ms ? timeout_ms : 30000));
        std::ostringstream report;
        bool ok = true;
        for (const auto& c : checks) {
            ok = ok && c.passed;
            report << (c.passed ? "PASS " : "FAIL ") << c.name;
            if (!c.detail.empty()) report << ' ' << c.detail;
            report << '\n';
        }
        *out_report = duplicate(report.str());
        if (all_passed) *all_passed = ok ? 1 : 0;
    });
}

}  // extern "C"
