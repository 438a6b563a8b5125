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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "qcvine/dsl.hpp"
#include "qcvine/render.hpp"
#include "qcvine/views.hpp"

using namespace qcvine;

namespace {

std::size_t count(const std::string &text, const std::string &needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

struct Built {
    CircuitModel model;
    ComponentDiagram diagram;
};

Built build(const std::string &text, const FoldState *fold = nullptr, dsl::Params params = {}) {
    Built b;
    b.model = dsl::compileProgram({text, std::move(params)});
    b.diagram = segment(b.model, fold ? *fold : FoldState::expandAll(b.model.semanticTree()));
    return b;
}

void checkSvg(const std::string &svg, const ComponentDiagram *diagram = nullptr) {
    const auto problem = testing::xmlProblem(svg);
    INFO(problem);
    CHECK(problem.empty());
    const auto ids = testing::svgIds(svg);
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    if (diagram) {
        for (const auto &sg : diagram->superGates) {
            CHECK(count(svg, "id=\"sg-" + std::to_string(sg.id) + "\"") == 1);
        }
    }
}

}  // namespace

TEST_SUITE("render") {
    TEST_CASE("theme validation") {
        RenderTheme t;
        CHECK_NOTHROW(t.validate());
        t.unit = 7;
        CHECK_THROWS_AS(t.validate(), InvalidInputError);
        t = RenderTheme{};
        t.wire = "#12345";
        CHECK_THROWS_AS(t.validate(), InvalidInputError);
        t = RenderTheme{};
        t.parallelismRamp[2] = "red";
        CHECK_THROWS_AS(t.validate(), InvalidInputError);
        t = RenderTheme{};
        t.groupPalette.clear();
        CHECK_THROWS_AS(t.validate(), InvalidInputError);
    }

    TEST_CASE("theme from JSON") {
        const auto t = themeFromJson(parseJson(
            R"({"unit": 32, "colors": {"wire": "#000000"}, "glyphs": {"cz": "box"}, "idleRamp": ["#000000", "#111111", "#222222", "#333333"]})"));
        CHECK(t.unit == 32);
        CHECK(t.wire == "#000000");
        CHECK((t.glyphs.at(GateName::CZ) == TargetGlyph::Box));
        CHECK((t.glyphs.at(GateName::CX) == TargetGlyph::Oplus));
        CHECK(t.idleRamp[3] == "#333333");
        CHECK_THROWS_AS(themeFromJson(parseJson(R"({"unti": 32})")), InvalidInputError);
        CHECK_THROWS_AS(themeFromJson(parseJson(R"({"colors": {"wrie": "#000000"}})")), InvalidInputError);
        CHECK_THROWS_AS(themeFromJson(parseJson(R"({"idleRamp": ["#000000"]})")), InvalidInputError);
        CHECK_THROWS_AS(themeFromJson(parseJson(R"({"unit": 4})")), InvalidInputError);
        CHECK_THROWS_AS(themeFromJson(parseJson(R"({"glyphs": {"cx": "star"}})")), InvalidInputError);
    }

    TEST_CASE("theme file") {
        const std::string path = "qcvine_theme_test.json";
        {
            std::ofstream out(path);
            out << R"({"fontSize": 13})";
        }
        CHECK(loadTheme(path).fontSize == 13);
        std::remove(path.c_str());
        CHECK_THROWS_AS(loadTheme(path), InvalidInputError);
    }

    TEST_CASE("label truncation") {
        CHECK(truncateLabel("Unitary", 4, 10) == "Unitary");
        CHECK(truncateLabel("Entanglement", 4, 10) == "Entangl ×4");
        CHECK(truncateLabel("Entanglement", 12, 3) == "E ×12");
        // Code points, not bytes.
        CHECK(truncateLabel("Ünïcödé", 2, 7) == "Ünïcödé");
        CHECK(truncateLabel("ÜnïcödéX", 2, 7) == "Ünïc ×2");
    }

    TEST_CASE("ghz component view glyphs") {
        const auto b = build(testing::readFixture("ghz.qv"), nullptr, {{"n", 3}});
        const auto svg = renderComponent(b.diagram, RenderTheme{});
        checkSvg(svg, &b.diagram);
        CHECK(count(svg, "class=\"wire\"") == 3);
        CHECK(count(svg, "class=\"sg primitive\"") == 3);
        CHECK(count(svg, "<title>h q[0]</title>") == 1);
        CHECK(count(svg, "<title>cx q[") == 2);
        CHECK(count(svg, ">H</text>") == 1);
        // Each cx: one control dot and one oplus ring.
        CHECK(count(svg, "r=\"4\" fill=\"#1a1a1a\"") == 2);
        CHECK(count(svg, "r=\"8.8\" fill=\"#ffffff\" stroke=\"#1a1a1a\"") == 2);
    }

    TEST_CASE("folded circuit renders one component box") {
        const FoldState none;
        const auto b = build(testing::readFixture("ghz.qv"), &none, {{"n", 3}});
        const auto svg = renderComponent(b.diagram, RenderTheme{});
        checkSvg(svg, &b.diagram);
        CHECK(count(svg, "class=\"sg component\"") == 1);
        CHECK(count(svg, "class=\"wire\"") == 1);
        CHECK(count(svg, "q[0..2]") == 1);
    }

    TEST_CASE("bundled wires are doubled and labelled with the range") {
        const FoldState top{{1}};
        const auto b = build("def F() { for i in 1..99 { h q[i]; } }\ncircuit m(99) { h q[0]; F(); }", &top);
        REQUIRE(b.diagram.superBits.size() == 2);
        const auto svg = renderComponent(b.diagram, RenderTheme{});
        checkSvg(svg, &b.diagram);
        CHECK(count(svg, ">q[1..98]</text>") == 1);
        // Two lines for the bundle, one for q[0].
        const auto wires = svg.substr(svg.find("<g class=\"wires\">"));
        CHECK(count(wires.substr(0, wires.find("<g class=\"gates\">")), "<line ") == 3);
    }

    TEST_CASE("abstraction without repetition is byte-identical to the component view") {
        for (const auto &text : {std::string("circuit m(3) { h q[0]; cx q[0], q[1]; ccx q[0], q[1], q[2]; }"),
                                 testing::readFixture("multiplier.qv")}) {
            const auto b = build(text);
            const auto ad = abstractDiagram(b.diagram, b.model);
            if (!ad.ellipsisBands.empty()) {
                continue;
            }
            CHECK(renderAbstraction(ad, b.diagram, RenderTheme{}) == renderComponent(b.diagram, RenderTheme{}));
        }
    }

    TEST_CASE("vertical abstraction draws three boxes and a dot column") {
        const auto b = build("circuit m(8) { for i in 0..8 { h q[i]; } }");
        const auto svg = renderAbstraction(abstractDiagram(b.diagram, b.model), b.diagram, RenderTheme{});
        checkSvg(svg);
        CHECK(count(svg, "class=\"sg primitive\"") == 3);
        CHECK(count(svg, "class=\"dot vertical\"") == 1);
        CHECK(count(svg, "class=\"legend\"") == 1);
    }

    TEST_CASE("diagonal abstraction draws three cx glyphs and diagonal dots") {
        const auto b = build("circuit m(10) { for i in 0..9 { cx q[i], q[i+1]; } }");
        const auto svg = renderAbstraction(abstractDiagram(b.diagram, b.model), b.diagram, RenderTheme{});
        checkSvg(svg);
        CHECK(count(svg, "class=\"sg primitive\"") == 3);
        CHECK(count(svg, "<title>cx q[") == 3);
        CHECK(count(svg, "class=\"dot diagonal\"") >= 1);
    }

    TEST_CASE("context views") {
        const auto b = build(testing::readFixture("ghz.qv"), nullptr, {{"n", 4}});
        const auto timeline = renderProvenance(provenance(b.diagram, 1), RenderTheme{});
        checkSvg(timeline);
        CHECK(count(timeline, "class=\"event\"") == 2);

        const auto p = build("circuit m(3) { h q[0]; h q[1]; h q[2]; x q[0]; }");
        const auto ctx = placementContext(p.diagram, 1);
        const auto placement = renderPlacement(p.diagram, ctx, RenderTheme{});
        checkSvg(placement, &p.diagram);
        // Column 0 carries the maximum parallelism: hottest color on every wire.
        CHECK(count(placement, "stroke=\"#d7191c\" stroke-width=\"4\" class=\"segment level-4\"") == 3);

        const auto matrix = renderConnectivity(connectivity(b.model), entanglementHistory(b.model), RenderTheme{});
        checkSvg(matrix);
        for (QubitId i = 0; i < 4; ++i) {
            for (QubitId j = 0; j < 4; ++j) {
                const bool adjacent = i + 1 == j || j + 1 == i;
                CHECK(count(matrix, "id=\"cell-" + std::to_string(i) + "-" + std::to_string(j) + "\"") ==
                      (adjacent ? 1U : 0U));
            }
        }
        CHECK(count(matrix, "class=\"snapshot\"") == 4);
    }

    TEST_CASE("placement selection overlays") {
        const auto b = build("circuit m(2) { h q[0]; x q[1]; x q[1]; x q[1]; cx q[0], q[1]; }");
        const auto ctx = placementContext(b.diagram, 1);
        PlacementSelection sel{0, parallelGates(b.diagram, 0), suggestPlacements(b.diagram, 0)};
        REQUIRE_FALSE(sel.suggestions.empty());
        const auto svg = renderPlacement(b.diagram, ctx, RenderTheme{}, sel);
        checkSvg(svg, &b.diagram);
        CHECK(count(svg, "class=\"suggestion\"") == sel.suggestions.size());
        CHECK(count(svg, "class=\"selected\"") == 1);
        CHECK(count(svg, "class=\"idle\"") >= 1);
    }

    TEST_CASE("every view is well formed on the fixtures") {
        const std::vector<std::pair<std::string, dsl::Params>> fixtures{
            {"ghz.qv", {{"n", 5}}}, {"qugan.qv", {{"n", 4}}}, {"multiplier.qv", {}}};
        for (const auto &[name, params] : fixtures) {
            const auto m = dsl::compileProgram({testing::readFixture(name), params});
            for (std::uint32_t depth = 0; depth < 6; ++depth) {
                const auto d = segment(m, FoldState::toDepth(m.semanticTree(), depth));
                checkSvg(renderComponent(d, RenderTheme{}), &d);
                checkSvg(renderAbstraction(abstractDiagram(d, m), d, RenderTheme{}));
                checkSvg(renderPlacement(d, placementContext(d, 2), RenderTheme{}), &d);
                checkSvg(renderProvenance(provenance(d, 0), RenderTheme{}));
            }
            checkSvg(renderConnectivity(connectivity(m), entanglementHistory(m), RenderTheme{}));
        }
    }

    TEST_CASE("special characters are escaped") {
        const auto m = importFlat(parseJson(R"({"qubits": 1, "gates": [
            {"kind": "rz", "operands": [0], "params": ["a<b&c\"'"]}]})"));
        const auto d = segment(m, FoldState::expandAll(m.semanticTree()));
        const auto svg = renderComponent(d, RenderTheme{});
        checkSvg(svg, &d);
        CHECK(svg.find("a&lt;b&amp;c&quot;&apos;") != std::string::npos);
    }

    TEST_CASE("rendering is deterministic") {
        const auto a = build(testing::readFixture("qugan.qv"), nullptr, {{"n", 4}});
        const auto b = build(testing::readFixture("qugan.qv"), nullptr, {{"n", 4}});
        CHECK(renderComponent(a.diagram, RenderTheme{}) == renderComponent(b.diagram, RenderTheme{}));
        CHECK(renderAbstraction(abstractDiagram(a.diagram, a.model), a.diagram, RenderTheme{}) ==
              renderAbstraction(abstractDiagram(b.diagram, b.model), b.diagram, RenderTheme{}));
    }
}
