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

// shadowprint command-line interface. Talks to the library only through the
// C API in shadowprint/shadowprint.h.

#include <CLI11.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shadowprint/shadowprint.h"

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kBackend = 2,
    kNumerical = 3,
    kInternal = 4,
};

int exit_code_for(sp_status s) {
    switch (s) {
        case SP_OK:
            return kOk;
        case SP_ERR_INVALID_ARGUMENT:
        case SP_ERR_SUITE_MISMATCH:
        case SP_ERR_PARSE:
            return kUsage;
        case SP_ERR_BACKEND:
        case SP_ERR_IO:
            return kBackend;
        case SP_ERR_NUMERICAL:
            return kNumerical;
        case SP_ERR_INTERNAL:
            return kInternal;
    }
    return kInternal;
}

/// Thrown to unwind out of a subcommand with a specific exit code.
struct Failure {
    int code;
};

void check(sp_status s, const char* context) {
    if (s != SP_OK) {
        std::fprintf(stderr, "shadowprint: %s: %s (%s)\n", context, sp_last_error(), sp_status_name(s));
        throw Failure{exit_code_for(s)};
    }
}

struct SuiteDeleter {
    void operator()(sp_suite* s) const { sp_suite_free(s); }
};
struct FingerprintDeleter {
    void operator()(sp_fingerprint* f) const { sp_fingerprint_free(f); }
};
struct StringDeleter {
    void operator()(char* s) const { sp_string_free(s); }
};
using SuitePtr = std::unique_ptr<sp_suite, SuiteDeleter>;
using FingerprintPtr = std::unique_ptr<sp_fingerprint, FingerprintDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

FingerprintPtr load_fingerprint(const std::string& path) {
    sp_fingerprint* raw = nullptr;
    check(sp_fingerprint_read(path.c_str(), &raw), ("reading " + path).c_str());
    return FingerprintPtr(raw);
}

SuitePtr load_suite(const std::string& path) {
    sp_suite* raw = nullptr;
    check(path.empty() ? sp_suite_default(&raw) : sp_suite_load(path.c_str(), &raw),
          path.empty() ? "default suite" : ("loading suite " + path).c_str());
    return SuitePtr(raw);
}

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::uint32_t parse_shots(const std::string& text) {
    if (text == "exact") return 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
    if (text.empty() || *end != '\0' || v == 0 || v > 0xffffffffULL) {
        std::fprintf(stderr, "shadowprint: --shots must be a positive count or 'exact', got '%s'\n", text.c_str());
        throw Failure{kUsage};
    }
    return static_cast<std::uint32_t>(v);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SHADOWPRINT_SEED"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (*end != '\0') {
            std::fprintf(stderr, "shadowprint: SHADOWPRINT_SEED must be an unsigned integer, got '%s'\n", env);
            throw Failure{kUsage};
        }
        return v;
    }
    return 0;
}

struct AnalysisFlags {
    bool calibrate = false;
    std::string calibration_profile = "variant-A";
    std::optional<double> c_dep;
    std::optional<double> c_amp;
    std::optional<double> c_phase;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--calibrate", calibrate, "Re-fit estimation constants on exact-mode builtin fingerprints");
        cmd->add_option("--calibration-profile", calibration_profile, "Builtin profile used by --calibrate")
            ->check(CLI::IsMember({"variant-A", "variant-B"}));
        cmd->add_option("--c-dep", c_dep, "Override the depolarizing constant");
        cmd->add_option("--c-amp", c_amp, "Override the amplitude-damping constant");
        cmd->add_option("--c-phase", c_phase, "Override the phase-damping constant");
    }

    sp_analysis_config resolve() const {
        sp_analysis_config cfg;
        sp_analysis_config_default(&cfg);
        if (calibrate) {
            check(sp_calibrate(calibration_profile.c_str(), nullptr, &cfg), "calibration");
        }
        const bool overridden = c_dep || c_amp || c_phase;
        if (c_dep) cfg.c_dep = *c_dep;
        if (c_amp) cfg.c_amp = *c_amp;
        if (c_phase) cfg.c_phase = *c_phase;
        if (overridden) {
            std::snprintf(cfg.provenance, sizeof cfg.provenance, "%s", "user-supplied");
        }
        return cfg;
    }
};

void print_diagnosis(const sp_fingerprint* fp, const sp_analysis_config& cfg) {
    sp_diagnosis d;
    check(sp_diagnose(fp, &cfg, &d), "diagnosis");
    char* text = nullptr;
    check(sp_diagnosis_format(&d, &cfg, &text), "formatting diagnosis");
    OwnedString owned(text);
    std::fputs(text, stdout);
}

// Reads the configured channel back from the file to report estimate error.
struct FileChannel {
    std::string name;
    double parameter = 0.0;
};

std::optional<FileChannel> configured_channel(const sp_fingerprint* fp) {
    char* json = nullptr;
    check(sp_fingerprint_to_json(fp, &json), "serializing fingerprint");
    OwnedString owned(json);
    const std::string text(json);
    const auto block = text.find("\"channel\": {");
    if (block == std::string::npos) return std::nullopt;
    const auto name_at = text.find("\"name\": \"", block);
    const auto param_at = text.find("\"parameter\": ", block);
    if (name_at == std::string::npos || param_at == std::string::npos) return std::nullopt;
    FileChannel ch;
    const auto name_start = name_at + 9;
    ch.name = text.substr(name_start, text.find('"', name_start) - name_start);
    ch.parameter = std::strtod(text.c_str() + param_at + 13, nullptr);
    return ch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shadowprint: noise fingerprints for quantum simulators"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sp_version()));

    // fingerprint
    auto* fp_cmd = app.add_subcommand("fingerprint", "Build a deviation fingerprint and write it as JSON");
    std::string backend = "builtin:variant-A";
    std::string channel;
    double param = 0.0;
    std::string shots_text = "500";
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::string suite_path;
    std::string heatmap_path;
    bool stamp = false;
    std::uint32_t timeout_ms = 30000;
    fp_cmd->add_option("--backend", backend, "builtin:variant-A | builtin:variant-B | bridge:<command line>");
    fp_cmd->add_option("--channel", channel, "Noise channel")
        ->required()
        ->check(CLI::IsMember({"identity", "depolarizing", "amplitude_damping", "phase_damping"}));
    fp_cmd->add_option("--param", param, "Channel parameter in [0, 1]")->check(CLI::Range(0.0, 1.0));
    fp_cmd->add_option("--shots", shots_text, "Shots per cell, or 'exact'");
    fp_cmd->add_option("--seed", seed, "Master seed (falls back to SHADOWPRINT_SEED, then 0)");
    fp_cmd->add_option("--out", out_path, "Output fingerprint file")->required();
    fp_cmd->add_option("--suite", suite_path, "Custom suite JSON (default: embedded suite_v1)");
    fp_cmd->add_option("--heatmap", heatmap_path, "Also render the deviation matrix as SVG");
    fp_cmd->add_flag("--timestamp", stamp, "Record the current UTC time in the metadata");
    fp_cmd->add_option("--timeout-ms", timeout_ms, "Bridge per-request timeout");

    // compare
    auto* cmp_cmd = app.add_subcommand("compare", "Frobenius distance between two fingerprints");
    std::string file_a;
    std::string file_b;
    std::string cmp_heatmap;
    std::string cmp_report;
    bool cmp_json = false;
    cmp_cmd->add_option("file_a", file_a)->required();
    cmp_cmd->add_option("file_b", file_b)->required();
    cmp_cmd->add_option("--heatmap", cmp_heatmap, "Render the difference matrix as SVG");
    cmp_cmd->add_option("--report", cmp_report, "Write the comparison report as JSON");
    cmp_cmd->add_flag("--json", cmp_json, "Print the JSON report instead of the text summary");

    // classify / estimate
    auto* cls_cmd = app.add_subcommand("classify", "Classify the noise channel behind a fingerprint");
    auto* est_cmd = app.add_subcommand("estimate", "Estimate the noise parameter behind a fingerprint");
    std::string diag_file;
    AnalysisFlags cls_flags;
    AnalysisFlags est_flags;
    cls_cmd->add_option("file", diag_file)->required();
    est_cmd->add_option("file", diag_file)->required();
    cls_flags.attach(cls_cmd);
    est_flags.attach(est_cmd);

    // scaling
    auto* sc_cmd = app.add_subcommand("scaling", "Measurement cost of fingerprinting vs process tomography");
    unsigned max_qubits = 8;
    std::uint64_t sc_shots = 500;
    std::string sc_format = "table";
    sc_cmd->add_option("--max-qubits", max_qubits)->check(CLI::Range(1u, 16u));
    sc_cmd->add_option("--shots", sc_shots);
    sc_cmd->add_option("--format", sc_format)->check(CLI::IsMember({"csv", "table"}));

    // suite
    auto* suite_cmd = app.add_subcommand("suite", "Print or validate reference suites");
    suite_cmd->require_subcommand(1);
    auto* suite_print = suite_cmd->add_subcommand("print", "Print a suite as JSON (default: embedded suite)");
    std::string print_path;
    suite_print->add_option("file", print_path);
    auto* suite_validate = suite_cmd->add_subcommand("validate", "Validate a suite file");
    std::string validate_path;
    suite_validate->add_option("file", validate_path)->required();

    // calibrate
    auto* cal_cmd = app.add_subcommand("calibrate", "Fit estimation constants from exact-mode sweeps");
    std::string cal_profile = "variant-A";
    std::string cal_suite;
    cal_cmd->add_option("--profile", cal_profile)->check(CLI::IsMember({"variant-A", "variant-B"}));
    cal_cmd->add_option("--suite", cal_suite);

    // conform
    auto* conf_cmd = app.add_subcommand("conform", "Run the bridge conformance suite against an adapter");
    std::string conf_command;
    std::uint32_t conf_shots = 500;
    std::uint32_t conf_timeout = 30000;
    conf_cmd->add_option("command", conf_command, "Adapter command line")->required();
    conf_cmd->add_option("--shots", conf_shots)->check(CLI::PositiveNumber);
    conf_cmd->add_option("--timeout-ms", conf_timeout);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*fp_cmd) {
            SuitePtr suite = suite_path.empty() ? nullptr : load_suite(suite_path);
            sp_fingerprint_options opts;
            sp_fingerprint_options_init(&opts);
            const std::string stamp_text = stamp ? utc_now() : std::string();
            opts.backend = backend.c_str();
            opts.channel = channel.c_str();
            opts.parameter = param;
            opts.shots = parse_shots(shots_text);
            opts.seed = resolve_seed(seed);
            opts.suite = suite.get();
            opts.timestamp = stamp ? stamp_text.c_str() : nullptr;
            opts.timeout_ms = timeout_ms;
            sp_fingerprint* raw = nullptr;
            check(sp_fingerprint_build(&opts, &raw), "building fingerprint");
            FingerprintPtr fp(raw);
            check(sp_fingerprint_write(fp.get(), out_path.c_str()), ("writing " + out_path).c_str());
            if (!heatmap_path.empty()) {
                check(sp_fingerprint_render_heatmap(fp.get(), heatmap_path.c_str()), "rendering heatmap");
            }
            std::size_t rows = 0;
            std::size_t cols = 0;
            check(sp_fingerprint_shape(fp.get(), &rows, &cols), "shape");
            std::printf("wrote %s (%zux%zu, backend %s, %s %g, shots %s, seed %" PRIu64 ")\n", out_path.c_str(), rows,
                        cols, backend.c_str(), channel.c_str(), param, opts.shots == 0 ? "exact" : shots_text.c_str(),
                        opts.seed);
            sp_analysis_config cfg;
            sp_analysis_config_default(&cfg);
            print_diagnosis(fp.get(), cfg);
            return kOk;
        }

        if (*cmp_cmd) {
            FingerprintPtr a = load_fingerprint(file_a);
            FingerprintPtr b = load_fingerprint(file_b);
            sp_comparison c;
            check(sp_compare(a.get(), b.get(), &c), "comparing fingerprints");
            char* json = nullptr;
            check(sp_compare_report_json(a.get(), b.get(), &json), "building report");
            OwnedString report(json);
            if (!cmp_report.empty()) {
                std::FILE* f = std::fopen(cmp_report.c_str(), "wb");
                if (f == nullptr || std::fputs(json, f) < 0 || std::fclose(f) != 0) {
                    std::fprintf(stderr, "shadowprint: cannot write report %s\n", cmp_report.c_str());
                    return kBackend;
                }
            }
            if (!cmp_heatmap.empty()) {
                check(sp_render_difference_heatmap(a.get(), b.get(), cmp_heatmap.c_str()), "rendering heatmap");
            }
            if (cmp_json) {
                std::fputs(json, stdout);
                return kOk;
            }
            std::printf("frobenius_distance: %.6g\n", c.distance);
            std::printf("noise_floor: %.6g\n", c.noise_floor);
            if (c.has_ratio) {
                std::printf("ratio: %.6g\n", c.ratio);
            } else {
                std::printf("ratio: n/a (both fingerprints are exact)\n");
            }
            std::printf("verdict: %s\n", c.systematic ? "systematic" : "within statistical noise");

            std::size_t rows = 0;
            std::size_t cols = 0;
            check(sp_fingerprint_shape(a.get(), &rows, &cols), "shape");
            std::vector<double> da(rows * cols);
            std::vector<double> db(rows * cols);
            check(sp_fingerprint_deviations(a.get(), da.data(), da.size()), "deviations");
            check(sp_fingerprint_deviations(b.get(), db.data(), db.size()), "deviations");
            std::printf("difference (rows = states, cols = observables):\n");
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t col = 0; col < cols; ++col) {
                    std::printf("%s%+.3f", col == 0 ? "  " : " ", da[r * cols + col] - db[r * cols + col]);
                }
                std::printf("\n");
            }
            return kOk;
        }

        if (*cls_cmd || *est_cmd) {
            const AnalysisFlags& flags = *cls_cmd ? cls_flags : est_flags;
            FingerprintPtr fp = load_fingerprint(diag_file);
            const sp_analysis_config cfg = flags.resolve();
            print_diagnosis(fp.get(), cfg);
            if (*est_cmd) {
                sp_diagnosis d;
                check(sp_diagnose(fp.get(), &cfg, &d), "diagnosis");
                if (auto ch = configured_channel(fp.get()); ch && ch->name == sp_noise_label_name(d.label)) {
                    std::printf("configured_parameter: %.6g\n", ch->parameter);
                    if (ch->parameter > 0.0) {
                        std::printf("relative_error: %.6g\n",
                                    std::abs(d.estimated_parameter - ch->parameter) / ch->parameter);
                    }
                }
            }
            return kOk;
        }

        if (*sc_cmd) {
            char* text = nullptr;
            check(sp_scaling_report(max_qubits, sc_shots, sc_format == "csv" ? 1 : 0, &text), "scaling report");
            OwnedString owned(text);
            std::fputs(text, stdout);
            return kOk;
        }

        if (*suite_cmd) {
            if (*suite_print) {
                SuitePtr suite = load_suite(print_path);
                char* json = nullptr;
                check(sp_suite_to_json(suite.get(), &json), "serializing suite");
                OwnedString owned(json);
                std::fputs(json, stdout);
                return kOk;
            }
            SuitePtr suite = load_suite(validate_path);
            std::printf("valid: %zu states x %zu observables\n", sp_suite_num_states(suite.get()),
                        sp_suite_num_observables(suite.get()));
            return kOk;
        }

        if (*cal_cmd) {
            SuitePtr suite = cal_suite.empty() ? nullptr : load_suite(cal_suite);
            sp_analysis_config cfg;
            sp_analysis_config_default(&cfg);
            check(sp_calibrate(cal_profile.c_str(), suite.get(), &cfg), "calibration");
            std::printf("c_dep: %.17g\nc_amp: %.17g\nc_phase: %.17g\nprovenance: %s\n", cfg.c_dep, cfg.c_amp,
                        cfg.c_phase, cfg.provenance);
            return kOk;
        }

        if (*conf_cmd) {
            char* report = nullptr;
            int passed = 0;
            check(sp_bridge_conformance(conf_command.c_str(), conf_shots, conf_timeout, &report, &passed),
                  "conformance");
            OwnedString owned(report);
            std::fputs(report, stdout);
            return passed ? kOk : kBackend;
        }
    } catch (const Failure& f) {
        return f.code;
    }
    return kUsage;
}
