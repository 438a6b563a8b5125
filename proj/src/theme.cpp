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

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qcvine/errors.hpp"
#include "qcvine/render.hpp"

namespace qcvine {

namespace {

bool isHexColor(const std::string &c) {
    if (c.size() != 7 || c[0] != '#') {
        return false;
    }
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (!std::isxdigit(static_cast<unsigned char>(c[i]))) {
            return false;
        }
    }
    return true;
}

void checkColor(const std::string &name, const std::string &value) {
    if (!isHexColor(value)) {
        throw InvalidInputError("theme color " + name + " is not #rrggbb: " + value);
    }
}

template <std::size_t N>
void readRamp(const Json &j, std::array<std::string, N> &ramp, const char *name) {
    if (!j.is_array() || j.size() != N) {
        throw InvalidInputError(std::string("theme ") + name + " needs exactly " + std::to_string(N) + " colors");
    }
    for (std::size_t i = 0; i < N; ++i) {
        ramp[i] = j[i].get<std::string>();
    }
}

}  // namespace

std::string_view toString(TargetGlyph glyph) {
    switch (glyph) {
        case TargetGlyph::Oplus:
            return "oplus";
        case TargetGlyph::Cross:
            return "cross";
        case TargetGlyph::Dot:
            return "dot";
        case TargetGlyph::Box:
            break;
    }
    return "box";
}

TargetGlyph parseTargetGlyph(std::string_view text) {
    for (auto g : {TargetGlyph::Box, TargetGlyph::Oplus, TargetGlyph::Cross, TargetGlyph::Dot}) {
        if (toString(g) == text) {
            return g;
        }
    }
    throw InvalidInputError("unknown glyph: " + std::string(text));
}

std::map<GateName, TargetGlyph> RenderTheme::defaultGlyphs() {
    std::map<GateName, TargetGlyph> glyphs;
    for (GateName name : allGateNames()) {
        glyphs[name] = TargetGlyph::Box;
    }
    glyphs[GateName::CX] = TargetGlyph::Oplus;
    glyphs[GateName::CCX] = TargetGlyph::Oplus;
    glyphs[GateName::CZ] = TargetGlyph::Dot;
    glyphs[GateName::CSWAP] = TargetGlyph::Cross;
    glyphs[GateName::SWAP] = TargetGlyph::Cross;
    return glyphs;
}

void RenderTheme::validate() const {
    if (unit < 8) {
        throw InvalidInputError("theme unit must be at least 8, got " + std::to_string(unit));
    }
    if (fontSize < 1) {
        throw InvalidInputError("theme fontSize must be positive");
    }
    checkColor("background", background);
    checkColor("wire", wire);
    checkColor("text", text);
    checkColor("gateFill", gateFill);
    checkColor("gateStroke", gateStroke);
    checkColor("componentFill", componentFill);
    checkColor("componentStroke", componentStroke);
    checkColor("control", control);
    checkColor("ellipsis", ellipsis);
    checkColor("highlight", highlight);
    checkColor("suggestion", suggestion);
    for (const auto &c : parallelismRamp) {
        checkColor("parallelismRamp", c);
    }
    for (const auto &c : idleRamp) {
        checkColor("idleRamp", c);
    }
    if (groupPalette.empty()) {
        throw InvalidInputError("theme groupPalette must not be empty");
    }
    for (const auto &c : groupPalette) {
        checkColor("groupPalette", c);
    }
}

RenderTheme themeFromJson(const Json &json) {
    RenderTheme theme;
    if (!json.is_object()) {
        throw InvalidInputError("theme must be a JSON object");
    }
    try {
        for (const auto &[key, value] : json.items()) {
            if (key == "unit") {
                theme.unit = value.get<int>();
            } else if (key == "fontFamily") {
                theme.fontFamily = value.get<std::string>();
            } else if (key == "fontSize") {
                theme.fontSize = value.get<int>();
            } else if (key == "colors") {
                const std::map<std::string, std::string *> slots{
                    {"background", &theme.background},     {"wire", &theme.wire},
                    {"text", &theme.text},                 {"gateFill", &theme.gateFill},
                    {"gateStroke", &theme.gateStroke},     {"componentFill", &theme.componentFill},
                    {"componentStroke", &theme.componentStroke}, {"control", &theme.control},
                    {"ellipsis", &theme.ellipsis},         {"highlight", &theme.highlight},
                    {"suggestion", &theme.suggestion},
                };
                for (const auto &[name, color] : value.items()) {
                    auto it = slots.find(name);
                    if (it == slots.end()) {
                        throw InvalidInputError("unknown theme color: " + name);
                    }
                    *it->second = color.get<std::string>();
                }
            } else if (key == "parallelismRamp") {
                readRamp(value, theme.parallelismRamp, "parallelismRamp");
            } else if (key == "idleRamp") {
                readRamp(value, theme.idleRamp, "idleRamp");
            } else if (key == "groupPalette") {
                theme.groupPalette = value.get<std::vector<std::string>>();
            } else if (key == "glyphs") {
                for (const auto &[gate, glyph] : value.items()) {
                    const auto name = parseGateName(gate);
                    if (!name) {
                        throw InvalidInputError("unknown gate in theme glyphs: " + gate);
                    }
                    theme.glyphs[*name] = parseTargetGlyph(glyph.get<std::string>());
                }
            } else {
                throw InvalidInputError("unknown theme key: " + key);
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInputError(std::string("malformed theme: ") + e.what());
    }
    theme.validate();
    return theme;
}

RenderTheme loadTheme(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInputError("cannot read theme file: " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return themeFromJson(parseJson(buffer.str()));
}

RenderTheme themeFromEnvironment() {
    const char *path = std::getenv("QCVINE_THEME");
    if (path == nullptr || *path == '\0') {
        return RenderTheme{};
    }
    return loadTheme(path);
}

}  // namespace qcvine
