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

#include "shadowprint/formats.hpp"

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shadowprint/error.hpp"

namespace shadowprint {

using ojson = nlohmann::ordered_json;

namespace {

ojson suite_json(const ReferenceSuite& suite) {
    ojson states = ojson::array();
    for (const auto& s : suite.states) {
        ojson gates = ojson::array();
        for (const auto& g : s.gates) {
            ojson entry = ojson::array({std::string(to_string(g.kind))});
            for (auto q : g.qubits) entry.push_back(q);
            gates.push_back(std::move(entry));
        }
        states.push_back({{"id", s.state_id}, {"gates", std::move(gates)}});
    }
    ojson observables = ojson::array();
    for (const auto& p : suite.observables) observables.push_back(p.label());
    return {{"version", suite.version},
            {"num_qubits", suite.num_qubits()},
            {"states", std::move(states)},
            {"observables", std::move(observables)}};
}

ReferenceSuite suite_from(const ojson& j) {
    if (!j.is_object()) throw ParseError("suite must be a JSON object");
    ReferenceSuite suite;
    suite.version = j.value("version", std::string("custom"));
    for (const auto& label : j.at("observables")) {
        suite.observables.emplace_back(label.get<std::string>());
    }
    std::size_t n = 0;
    if (j.contains("num_qubits")) {
        n = j.at("num_qubits").get<std::size_t>();
    } else if (!suite.observables.empty()) {
        n = suite.observables.front().num_qubits();
    }
    for (const auto& s : j.at("states")) {
        PrepCircuit c;
        c.state_id = s.at("id").get<std::string>();
        c.num_qubits = n;
        for (const auto& g : s.at("gates")) {
            if (!g.is_array() || g.empty()) throw ParseError("gate entries must be [name, qubit...] arrays");
            Gate gate{parse_gate_kind(g.at(0).get<std::string>()), {}};
            for (std::size_t i = 1; i < g.size(); ++i) gate.qubits.push_back(g.at(i).get<std::size_t>());
            c.gates.push_back(std::move(gate));
        }
        suite.states.push_back(std::move(c));
    }
    validate_suite(suite);
    return suite;
}

ojson matrix_json(const RealMatrix& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

RealMatrix matrix_from(const ojson& j, std::size_t rows, std::size_t cols, const char* name) {
    if (!j.is_array() || j.size() != rows) {
        throw ParseError(std::string("matrix '") + name + "' must have " + std::to_string(rows) + " rows");
    }
    RealMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError(std::string("matrix '") + name + "' row " + std::to_string(r) + " must have " +
                             std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_number()) throw ParseError(std::string("non-numeric entry in matrix '") + name + "'");
            m(r, c) = row[c].get<double>();
        }
    }
    return m;
}

ojson parse_json(std::string_view text, const char* what) {
    try {
        return ojson::parse(text);
    } catch (const ojson::exception& e) {
        throw ParseError(std::string(what) + " is not valid JSON: " + e.what());
    }
}

}  // namespace

std::string suite_to_json(const ReferenceSuite& suite) { return suite_json(suite).dump(2) + "\n"; }

ReferenceSuite suite_from_json(std::string_view text) {
    const ojson j = parse_json(text, "suite file");
    try {
        return suite_from(j);
    } catch (const ojson::exception& e) {
        throw ParseError(std::string("malformed suite: ") + e.what());
    }
}

ReferenceSuite read_suite_file(const std::string& path) { return suite_from_json(read_text_file(path)); }

std::string fingerprint_to_json(const FingerprintMatrix& f) {
    const auto& md = f.metadata;
    ojson channels = ojson::array();
    for (const auto& c : md.backend_info.channels) channels.push_back(c);
    ojson metadata = {
        {"backend", md.backend_id},
        {"variant_profile",
         {{"name", md.profile.name},
          {"depolarizing", std::string(to_string(md.profile.depolarizing))},
          {"application_policy", std::string(to_string(md.profile.policy))},
          {"qubit_order", std::string(to_string(md.profile.qubit_order))}}},
        {"channel", {{"name", std::string(to_string(md.channel.kind))}, {"parameter", md.channel.parameter}}},
        {"shots", md.shots ? ojson(*md.shots) : ojson("exact")},
        {"master_seed", md.master_seed},
        {"suite_version", md.suite_version},
        {"timestamp", md.timestamp ? ojson(*md.timestamp) : ojson(nullptr)},
        {"backend_info",
         {{"name", md.backend_info.name}, {"version", md.backend_info.version}, {"channels", std::move(channels)}}},
    };
    ojson doc = {
        {"format", std::string(kFingerprintFormat)},
        {"format_version", std::string(kFingerprintFormatVersion)},
        {"metadata", std::move(metadata)},
        {"suite", suite_json(f.suite)},
        {"rows", f.k()},
        {"cols", f.n()},
        {"ideal", matrix_json(f.ideal)},
        {"observed", matrix_json(f.observed)},
        {"deviations", matrix_json(f.deviations)},
    };
    return doc.dump(2) + "\n";
}

FingerprintMatrix fingerprint_from_json(std::string_view text) {
    const ojson doc = parse_json(text, "fingerprint file");
    FingerprintMatrix f;
    try {
        if (doc.at("format").get<std::string>() != kFingerprintFormat) {
            throw ParseError("not a fingerprint file (format tag '" + doc.at("format").get<std::string>() + "')");
        }
        const std::string version = doc.at("format_version").get<std::string>();
        if (version != kFingerprintFormatVersion) {
            throw ParseError("unsupported fingerprint format version '" + version + "'");
        }
        f.suite = suite_from(doc.at("suite"));

        const ojson& md = doc.at("metadata");
        auto& out = f.metadata;
        out.backend_id = md.at("backend").get<std::string>();
        const ojson& vp = md.at("variant_profile");
        out.profile.name = vp.at("name").get<std::string>();
        auto dep = parse_depolarizing_variant(vp.at("depolarizing").get<std::string>());
        auto policy = parse_application_policy(vp.at("application_policy").get<std::string>());
        auto order = parse_qubit_order(vp.at("qubit_order").get<std::string>());
        if (!dep || !policy || !order) throw ParseError("unknown variant profile setting");
        out.profile.depolarizing = *dep;
        out.profile.policy = *policy;
        out.profile.qubit_order = *order;
        auto kind = parse_channel_kind(md.at("channel").at("name").get<std::string>());
        if (!kind) throw ParseError("unknown channel name in metadata");
        out.channel = {*kind, md.at("channel").at("parameter").get<double>()};
        const ojson& shots = md.at("shots");
        if (shots.is_string()) {
            if (shots.get<std::string>() != "exact") throw ParseError("shots must be a count or \"exact\"");
            out.shots = std::nullopt;
        } else {
            out.shots = shots.get<std::uint32_t>();
            if (*out.shots == 0) throw ParseError("shots must be positive");
        }
        out.master_seed = md.at("master_seed").get<std::uint64_t>();
        out.suite_version = md.at("suite_version").get<std::string>();
        if (out.suite_version != f.suite.version) throw ParseError("metadata suite_version disagrees with the suite");
        if (!md.at("timestamp").is_null()) out.timestamp = md.at("timestamp").get<std::string>();
        const ojson& info = md.at("backend_info");
        out.backend_info.name = info.at("name").get<std::string>();
        out.backend_info.version = info.at("version").get<std::string>();
        for (const auto& c : info.at("channels")) out.backend_info.channels.push_back(c.get<std::string>());

        const std::size_t k = doc.at("rows").get<std::size_t>();
        const std::size_t n = doc.at("cols").get<std::size_t>();
        if (k != f.suite.states.size() || n != f.suite.observables.size()) {
            throw ParseError("matrix dimensions do not match the embedded suite");
        }
        f.ideal = matrix_from(doc.at("ideal"), k, n, "ideal");
        f.observed = matrix_from(doc.at("observed"), k, n, "observed");
        f.deviations = matrix_from(doc.at("deviations"), k, n, "deviations");
    } catch (const ojson::exception& e) {
        throw ParseError(std::string("malformed fingerprint file: ") + e.what());
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("invalid fingerprint file: ") + e.what());
    }
    try {
        validate_fingerprint(f);
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("inconsistent fingerprint file: ") + e.what());
    }
    return f;
}

void write_fingerprint_file(const FingerprintMatrix& f, const std::string& path) {
    write_text_file_atomic(path, fingerprint_to_json(f));
}

FingerprintMatrix read_fingerprint_file(const std::string& path) {
    return fingerprint_from_json(read_text_file(path));
}

std::string comparison_to_json(const FingerprintMatrix& a, const FingerprintMatrix& b, const ComparisonReport& report) {
    auto side = [](const FingerprintMatrix& f) {
        return ojson{{"backend", f.metadata.backend_id},
                     {"channel", std::string(to_string(f.metadata.channel.kind))},
                     {"parameter", f.metadata.channel.parameter},
                     {"shots", f.metadata.shots ? ojson(*f.metadata.shots) : ojson("exact")},
                     {"master_seed", f.metadata.master_seed}};
    };
    ojson rows = ojson::array();
    for (const auto& s : a.suite.states) rows.push_back(s.state_id);
    ojson cols = ojson::array();
    for (const auto& p : a.suite.observables) cols.push_back(p.label());
    ojson doc = {
        {"format", std::string(kComparisonFormat)},
        {"format_version", std::string(kFingerprintFormatVersion)},
        {"suite_version", a.suite.version},
        {"a", side(a)},
        {"b", side(b)},
        {"frobenius_distance", report.distance},
        {"noise_floor", report.noise_floor},
        {"ratio", report.ratio ? ojson(*report.ratio) : ojson(nullptr)},
        {"systematic_ratio_threshold", kSystematicRatio},
        {"systematic", report.systematic},
        {"rows", std::move(rows)},
        {"cols", std::move(cols)},
        {"difference", matrix_json(report.difference)},
    };
    return doc.dump(2) + "\n";
}

std::string format_scaling(const std::vector<CostReport>& rows, std::uint64_t shots, TableFormat format) {
    std::ostringstream out;
    char ratio[64];
    const bool reference_shots = shots == kReferenceShots;
    if (format == TableFormat::Csv) {
        out << "qubits,shadow_measurements,tomography_measurements,ratio,reference_shadow,reference_tomography,"
               "ratio_vs_reference_shadow\n";
        for (const auto& r : rows) {
            std::snprintf(ratio, sizeof ratio, "%.6g", r.ratio);
            out << r.qubits << ',' << to_decimal(r.shadow_measurements) << ',' << to_decimal(r.tomography_measurements)
                << ',' << ratio;
            if (reference_shots && r.qubits == kReferenceQubits) {
                char ref[96];
                std::snprintf(ref, sizeof ref, ",%llu,%.2g,%.6g",
                              static_cast<unsigned long long>(kReferenceShadowMeasurements),
                              kReferenceTomographyMeasurements,
                              to_double(r.tomography_measurements) / static_cast<double>(kReferenceShadowMeasurements));
                out << ref;
            } else {
                out << ",,,";
            }
            out << '\n';
        }
        return out.str();
    }
    char line[160];
    std::snprintf(line, sizeof line, "%6s  %22s  %26s  %12s\n", "qubits", "shadow", "tomography", "ratio");
    out << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%6u  %22s  %26s  %12.6g", r.qubits, to_decimal(r.shadow_measurements).c_str(),
                      to_decimal(r.tomography_measurements).c_str(), r.ratio);
        out << line;
        if (reference_shots && r.qubits == kReferenceQubits) {
            std::snprintf(line, sizeof line, "   <- reference: shadow %llu, tomography %.2g, ratio vs reference shadow %.4g",
                          static_cast<unsigned long long>(kReferenceShadowMeasurements), kReferenceTomographyMeasurements,
                          to_double(r.tomography_measurements) / static_cast<double>(kReferenceShadowMeasurements));
            out << line;
        }
        out << '\n';
    }
    return out.str();
}

std::string format_diagnosis(const NoiseDiagnosis& d) {
    const auto& f = d.features;
    const auto& c = d.config;
    char buf[1024];
    std::snprintf(buf, sizeof buf,
                  "label: %s\n"
                  "estimated_parameter: %.6g\n"
                  "features:\n"
                  "  mean_dev: %.6g\n"
                  "  std_dev: %.6g\n"
                  "  frobenius_norm: %.6g\n"
                  "  sparsity: %.6g\n"
                  "  max_abs_dev: %.6g\n"
                  "  variance_pattern: %.6g\n"
                  "thresholds:\n"
                  "  sparsity_tau: %.6g\n"
                  "  phase_sparsity: %.6g\n"
                  "  amplitude_mean: %.6g\n"
                  "constants:\n"
                  "  c_dep: %.6g\n"
                  "  c_amp: %.6g\n"
                  "  amp_variance_scale: %.6g\n"
                  "  c_phase: %.6g\n"
                  "  provenance: %s\n",
                  std::string(to_string(d.label)).c_str(), d.estimated_parameter, f.mean_dev, f.std_dev,
                  f.frobenius_norm, f.sparsity, f.max_abs_dev, f.variance_pattern, c.sparsity_tau,
                  c.phase_sparsity_threshold, c.amplitude_mean_threshold, c.c_dep, c.c_amp, c.amp_variance_scale,
                  c.c_phase, c.provenance.c_str());
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file_atomic(const std::string& path, std::string_view contents) {
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open '" + tmp + "' for writing");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.close();
        if (!out) {
            std::remove(tmp.c_str());
            throw IoError("failed writing '" + tmp + "'");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot move output into place at '" + path + "'");
    }
}

}  // namespace shadowprint
