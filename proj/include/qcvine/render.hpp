// Copyright 2026 The qcvine Authors
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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcvine/abstraction.hpp"
#include "qcvine/analytics.hpp"
#include "qcvine/json_io.hpp"

namespace qcvine {

/// How the target operand of a controlled gate is drawn.
enum class TargetGlyph : std::uint8_t { Box, Oplus, Cross, Dot };

std::string_view toString(TargetGlyph glyph);
TargetGlyph parseTargetGlyph(std::string_view text);

struct RenderTheme {
    int unit = 40;  // grid cell size in px
    std::string fontFamily = "Helvetica, Arial, sans-serif";
    int fontSize = 11;

    std::string background = "#ffffff";
    std::string wire = "#404040";
    std::string text = "#1a1a1a";
    std::string gateFill = "#ffffff";
    std::string gateStroke = "#1a1a1a";
    std::string componentFill = "#e3ecf7";
    std::string componentStroke = "#3d6aa2";
    std::string control = "#1a1a1a";
    std::string ellipsis = "#7a7a7a";
    std::string highlight = "#f2b134";
    std::string suggestion = "#2e9e5b";

    /// Low to high load; index = parallelism level.
    std::array<std::string, kParallelismLevels> parallelismRamp{"#2c7bb6", "#abd9e9", "#ffffbf", "#fdae61",
                                                                "#d7191c"};
    /// Short to long idle spans; index = idle level.
    std::array<std::string, 4> idleRamp{"#edf8e9", "#bae4b3", "#74c476", "#238b45"};
    /// Entanglement group colors, cycled.
    std::vector<std::string> groupPalette{"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                          "#66a61e", "#e6ab02", "#a6761d", "#666666"};

    std::map<GateName, TargetGlyph> glyphs = defaultGlyphs();

    static std::map<GateName, TargetGlyph> defaultGlyphs();

    /// Throws InvalidInputError unless every color is `#rrggbb`, unit >= 8
    /// and fontSize >= 1.
    void validate() const;
};

/// Overlays the keys present in `json` onto the defaults. Unknown keys are
/// rejected so that typos do not pass silently.
RenderTheme themeFromJson(const Json &json);
RenderTheme loadTheme(const std::string &path);
/// Theme named by the QCVINE_THEME environment variable, or the defaults.
RenderTheme themeFromEnvironment();

/// `label` if it fits in `maxChars`, otherwise a prefix plus a ` ×count`
/// suffix. Characters are code points.
std::string truncateLabel(const std::string &label, std::size_t count, std::size_t maxChars);

std::string renderComponent(const ComponentDiagram &diagram, const RenderTheme &theme);

/// `source` supplies glyph details of the visible gates.
std::string renderAbstraction(const AbstractionDiagram &abstraction, const ComponentDiagram &source,
                              const RenderTheme &theme);

std::string renderProvenance(const ProvenanceTimeline &timeline, const RenderTheme &theme);

/// Optional selection highlights the gate's idle spans, those of its
/// parallel gates, and the suggested destination columns.
struct PlacementSelection {
    SuperGateId gate = 0;
    std::vector<SuperGateId> parallel;
    std::vector<std::uint32_t> suggestions;
};

std::string renderPlacement(const ComponentDiagram &diagram, const PlacementContext &context,
                            const RenderTheme &theme, const std::optional<PlacementSelection> &selection = {});

std::string renderConnectivity(const ConnectivityMatrix &matrix, const EntanglementHistory &history,
                               const RenderTheme &theme);

}  // namespace qcvine
