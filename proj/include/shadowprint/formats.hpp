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

/**
 * @file
 * Persistent artefacts: fingerprint files, suite files, comparison reports,
 * scaling tables and diagnosis summaries.
 *
 * Fingerprint files are versioned JSON. Reals are written in the shortest
 * form that parses back to the same double, so read(write(F)) == F and
 * write(read(write(F))) is byte-identical to write(F).
 */

#include <string>
#include <string_view>
#include <vector>

#include "shadowprint/analysis.hpp"
#include "shadowprint/cost.hpp"
#include "shadowprint/fingerprint.hpp"
#include "shadowprint/suite.hpp"

namespace shadowprint {

inline constexpr std::string_view kFingerprintFormat = "shadowprint-fingerprint";
inline constexpr std::string_view kFingerprintFormatVersion = "1.0";
inline constexpr std::string_view kComparisonFormat = "shadowprint-comparison";

std::string suite_to_json(const ReferenceSuite& suite);
/// Parses {version?, states: [{id, gates: [[name, q...]...]}...], observables: [...]}
/// and validates it. Missing version becomes "custom". Throws ParseError or
/// InvalidInput.
ReferenceSuite suite_from_json(std::string_view text);
ReferenceSuite read_suite_file(const std::string& path);

std::string fingerprint_to_json(const FingerprintMatrix& f);
FingerprintMatrix fingerprint_from_json(std::string_view text);

/// Writes through a temporary file and rename, so a failed run never leaves a
/// partial file at `path`.
void write_fingerprint_file(const FingerprintMatrix& f, const std::string& path);
FingerprintMatrix read_fingerprint_file(const std::string& path);

std::string comparison_to_json(const FingerprintMatrix& a, const FingerprintMatrix& b, const ComparisonReport& report);

enum class TableFormat { Csv, Table };

/// n, shadow, tomography, ratio per row; the row matching the 8-qubit,
/// 500-shot reference configuration also carries the reference figures.
std::string format_scaling(const std::vector<CostReport>& rows, std::uint64_t shots, TableFormat format);

/// Human-readable "key: value" block: label, estimate, six features,
/// thresholds and constants with their provenance.
std::string format_diagnosis(const NoiseDiagnosis& d);

/// Reads a whole file; throws IoError.
std::string read_text_file(const std::string& path);
/// Atomic write via temporary file and rename; throws IoError.
void write_text_file_atomic(const std::string& path, std::string_view contents);

}  // namespace shadowprint
