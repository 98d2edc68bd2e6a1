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

#include <cstdint>
#include <string>
#include <vector>

#include "shadowprint/fingerprint.hpp"

namespace shadowprint {

struct HeatmapSpec {
    RealMatrix matrix;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::string title;
};

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kNegativeColor{33, 102, 172};
inline constexpr Rgb kNeutralColor{255, 255, 255};
inline constexpr Rgb kPositiveColor{178, 24, 43};

/// max|x| rounded up to one significant digit (0.0667 -> 0.07, 1.93 -> 2).
/// A zero input maps to 1 so the scale stays well defined.
double scale_endpoint(double max_abs);

/// Three-stop diverging map: -endpoint -> blue, 0 -> white, +endpoint -> red,
/// linear in between, saturating outside [-endpoint, endpoint].
Rgb diverging_color(double value, double endpoint);

std::string to_hex(Rgb c);

/// Heatmap as a standalone SVG document: one <rect class="cell"> per entry,
/// row and column labels, and a legend showing the symmetric scale. Output is
/// a pure function of `spec`.
std::string render_heatmap_svg(const HeatmapSpec& spec);

/// Writes render_heatmap_svg(spec) to `path`; throws IoError on failure.
void render_heatmap(const HeatmapSpec& spec, const std::string& path);

/// Heatmap of a fingerprint's deviation matrix labelled by its suite.
HeatmapSpec fingerprint_heatmap(const FingerprintMatrix& f, std::string title);

}  // namespace shadowprint
