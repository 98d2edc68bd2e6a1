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

/*
 * C interface to the shadowprint noise-fingerprinting library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an sp_status; on failure a description of the
 * most recent error on the calling thread is available from sp_last_error().
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with sp_string_free().
 */
#ifndef SHADOWPRINT_SHADOWPRINT_H
#define SHADOWPRINT_SHADOWPRINT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SP_API __declspec(dllexport)
#else
#define SP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
    SP_OK = 0,
    SP_ERR_INVALID_ARGUMENT = 1,
    SP_ERR_SUITE_MISMATCH = 2,
    SP_ERR_BACKEND = 3,
    SP_ERR_NUMERICAL = 4,
    SP_ERR_IO = 5,
    SP_ERR_PARSE = 6,
    SP_ERR_INTERNAL = 7
} sp_status;

typedef struct sp_suite sp_suite;
typedef struct sp_fingerprint sp_fingerprint;

SP_API const char* sp_version(void);
SP_API const char* sp_last_error(void);
SP_API const char* sp_status_name(sp_status status);
SP_API void sp_string_free(char* s);

/* ---- reference suites ---------------------------------------------------- */

SP_API sp_status sp_suite_default(sp_suite** out);
/* Loads and validates a suite JSON file. */
SP_API sp_status sp_suite_load(const char* path, sp_suite** out);
SP_API void sp_suite_free(sp_suite* suite);
SP_API sp_status sp_suite_to_json(const sp_suite* suite, char** out_json);
SP_API size_t sp_suite_num_states(const sp_suite* suite);
SP_API size_t sp_suite_num_observables(const sp_suite* suite);

/* ---- fingerprints -------------------------------------------------------- */

typedef struct sp_fingerprint_options {
    /* "builtin:variant-A", "builtin:variant-B" or "bridge:<command line>" */
    const char* backend;
    /* identity | depolarizing | amplitude_damping | phase_damping */
    const char* channel;
    double parameter;
    /* Shots per cell; 0 selects exact mode. */
    uint32_t shots;
    uint64_t seed;
    /* NULL selects the default suite. */
    const sp_suite* suite;
    /* Recorded verbatim in the metadata; NULL leaves the field empty. */
    const char* timestamp;
    /* Per-request bridge timeout. */
    uint32_t timeout_ms;
} sp_fingerprint_options;

SP_API void sp_fingerprint_options_init(sp_fingerprint_options* options);
SP_API sp_status sp_fingerprint_build(const sp_fingerprint_options* options, sp_fingerprint** out);
SP_API sp_status sp_fingerprint_read(const char* path, sp_fingerprint** out);
/* Never leaves a partially written file at `path`. */
SP_API sp_status sp_fingerprint_write(const sp_fingerprint* fp, const char* path);
SP_API sp_status sp_fingerprint_to_json(const sp_fingerprint* fp, char** out_json);
SP_API void sp_fingerprint_free(sp_fingerprint* fp);
SP_API sp_status sp_fingerprint_shape(const sp_fingerprint* fp, size_t* rows, size_t* cols);
/* Copies the row-major deviation matrix; `len` must be at least rows*cols. */
SP_API sp_status sp_fingerprint_deviations(const sp_fingerprint* fp, double* out, size_t len);
SP_API sp_status sp_fingerprint_render_heatmap(const sp_fingerprint* fp, const char* path);

/* ---- analysis ------------------------------------------------------------ */

typedef struct sp_features {
    double mean_dev;
    double std_dev;
    double frobenius_norm;
    double sparsity;
    double max_abs_dev;
    double variance_pattern;
} sp_features;

typedef enum sp_noise_label {
    SP_LABEL_PHASE_DAMPING = 0,
    SP_LABEL_AMPLITUDE_DAMPING = 1,
    SP_LABEL_DEPOLARIZING = 2
} sp_noise_label;

typedef struct sp_analysis_config {
    double sparsity_tau;
    double phase_sparsity_threshold;
    double amplitude_mean_threshold;
    double c_dep;
    double c_amp;
    double amp_variance_scale;
    double c_phase;
    char provenance[96];
} sp_analysis_config;

typedef struct sp_diagnosis {
    sp_noise_label label;
    double estimated_parameter;
    sp_features features;
} sp_diagnosis;

SP_API void sp_analysis_config_default(sp_analysis_config* config);
/* Re-fits the estimation constants from exact-mode fingerprints of the named
 * builtin profile at depolarizing 0.05, amplitude damping 0.10 and phase
 * damping 0.08. `suite` may be NULL for the default suite. Thresholds in
 * `config` are kept. */
SP_API sp_status sp_calibrate(const char* profile, const sp_suite* suite, sp_analysis_config* config);
SP_API sp_status sp_diagnose(const sp_fingerprint* fp, const sp_analysis_config* config, sp_diagnosis* out);
SP_API sp_status sp_diagnosis_format(const sp_diagnosis* diagnosis, const sp_analysis_config* config, char** out_text);
SP_API const char* sp_noise_label_name(sp_noise_label label);

/* ---- comparison ---------------------------------------------------------- */

typedef struct sp_comparison {
    double distance;
    double noise_floor;
    /* Valid only when has_ratio is nonzero. */
    double ratio;
    int has_ratio;
    int systematic;
} sp_comparison;

SP_API sp_status sp_compare(const sp_fingerprint* a, const sp_fingerprint* b, sp_comparison* out);
SP_API sp_status sp_compare_report_json(const sp_fingerprint* a, const sp_fingerprint* b, char** out_json);
SP_API sp_status sp_render_difference_heatmap(const sp_fingerprint* a, const sp_fingerprint* b, const char* path);
SP_API sp_status sp_noise_floor(size_t num_entries, uint64_t shots, double* out);

/* ---- cost model ---------------------------------------------------------- */

typedef struct sp_cost_row {
    unsigned qubits;
    double shadow_measurements;
    double tomography_measurements;
    double ratio;
    char shadow_decimal[48];
    char tomography_decimal[48];
} sp_cost_row;

SP_API sp_status sp_cost_row_compute(unsigned qubits, uint64_t shots, sp_cost_row* out);
/* format: 0 = aligned table, 1 = CSV */
SP_API sp_status sp_scaling_report(unsigned max_qubits, uint64_t shots, int format, char** out_text);

/* ---- bridge -------------------------------------------------------------- */

/* Runs the adapter conformance suite; `out_report` receives one
 * "PASS|FAIL <check> <detail>" line per check. */
SP_API sp_status sp_bridge_conformance(const char* command, uint32_t shots, uint32_t timeout_ms, char** out_report,
                                       int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* SHADOWPRINT_SHADOWPRINT_H */
