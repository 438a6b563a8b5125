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

#include <numeric>

#include "generators.hpp"
#include "oracles.hpp"
#include "qcvine/analytics.hpp"
#include "qcvine/dsl.hpp"

using namespace qcvine;

namespace {

struct Built {
    CircuitModel model;
    ComponentDiagram diagram;
};

Built build(const std::string &text, dsl::Params params = {}) {
    Built b;
    b.model = dsl::compileProgram({text, std::move(params)});
    b.diagram = segment(b.model, FoldState::expandAll(b.model.semanticTree()));
    return b;
}

Built ghz(std::int64_t n) {
    return build(testing::readFixture("ghz.qv"), {{"n", n}});
}

const IdleSpan &spanOf(const PlacementContext &ctx, SuperGateId gate, QubitId wire) {
    for (const auto &s : ctx.idleSpans) {
        if (s.gate == gate && s.wire == wire) {
            return s;
        }
    }
    FAIL("no idle span");
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_SUITE("analytics") {
    TEST_CASE("ghz provenance") {
        const auto b = ghz(3);
        const auto q1 = provenance(b.diagram, 1);
        REQUIRE(q1.events.size() == 2);
        CHECK(q1.events[0].column == 1);
        CHECK(q1.events[1].column == 2);
        CHECK(q1.events[0].label == "cx");
        CHECK(q1.span == 3);
        const auto q0 = provenance(b.diagram, 0);
        REQUIRE(q0.events.size() == 2);
        CHECK(q0.events[0].label == "h");
        CHECK(q0.events[0].column == 0);
        CHECK_THROWS_AS(provenance(b.diagram, 3), NotFoundError);
    }

    TEST_CASE("untouched qubit has an empty timeline") {
        const auto b = build("circuit m(3) { h q[0]; x q[0]; }");
        const auto t = provenance(b.diagram, 2);
        CHECK(t.events.empty());
        CHECK(t.span == 2);
    }

    TEST_CASE("parallelism per column") {
        const auto b = build("circuit m(4) { h q[0]; h q[1]; h q[2]; x q[0]; }");
        const auto ctx = placementContext(b.diagram, 1);
        CHECK(ctx.parallelism == std::vector<std::uint32_t>{3, 1});
        CHECK(std::accumulate(ctx.parallelism.begin(), ctx.parallelism.end(), 0U) == b.diagram.superGates.size());
    }

    TEST_CASE("idle span between gates") {
        const auto b = build("circuit m(2) { h q[0]; x q[1]; x q[1]; x q[1]; x q[1]; x q[1]; cx q[0], q[1]; }");
        REQUIRE(b.diagram.column(6) == 5);
        const auto ctx = placementContext(b.diagram, 1);
        const auto &h = spanOf(ctx, 0, 0);
        CHECK(h.before == 0);
        CHECK(h.after == 4);
        const auto &cx = spanOf(ctx, 6, 0);
        CHECK(cx.before == 4);
        CHECK(cx.after == 0);
        CHECK(ctx.idleExtent[0] == doctest::Approx(4.0 / 6.0));
        CHECK(ctx.idleExtent[1] == doctest::Approx(0.0));
        CHECK(h.afterLevel > h.beforeLevel);
    }

    TEST_CASE("single gate circuit") {
        const auto b = build("circuit m(1) { h q[0]; }");
        const auto ctx = placementContext(b.diagram, 1);
        CHECK(b.diagram.width == 1);
        CHECK(ctx.idleExtent == std::vector<double>{0.0});
        CHECK(ctx.parallelism == std::vector<std::uint32_t>{1});
    }

    TEST_CASE("threshold must be positive") {
        const auto b = ghz(3);
        CHECK_THROWS_AS(placementContext(b.diagram, 0), InvalidInputError);
    }

    TEST_CASE("parallelism levels split at the threshold") {
        for (std::uint32_t maxP = 1; maxP <= 12; ++maxP) {
            for (std::uint32_t t = 1; t <= maxP + 1; ++t) {
                std::uint8_t previous = 0;
                for (std::uint32_t p = 1; p <= maxP; ++p) {
                    const auto level = parallelismLevel(p, t, maxP);
                    CHECK(level < kParallelismLevels);
                    CHECK((p >= t) == (level >= 2));
                    CHECK(level >= previous);
                    previous = level;
                    // Raising the threshold never raises a level.
                    CHECK(parallelismLevel(p, t + 1, maxP) <= level);
                }
            }
        }
        CHECK(parallelismLevel(0, 1, 3) == 0);
        CHECK(parallelismLevel(5, 1, 5) == 4);
    }

    TEST_CASE("placement suggestions") {
        // x on q1 is alone on its wire; the diagram is four columns wide.
        const auto b = build("circuit m(4) { h q[0]; h q[0]; h q[0]; h q[0]; x q[1]; cx q[2], q[3]; z q[2]; z q[2]; }");
        REQUIRE(b.diagram.width == 4);
        const SuperGateId x = 4;
        REQUIRE(b.diagram.column(x) == 0);
        // Parallelism: col0 {h, x, cx} = 3, col1 {h, z} = 2, col2 {h, z} = 2, col3 {h} = 1.
        CHECK(suggestPlacements(b.diagram, x) == std::vector<std::uint32_t>{3, 1, 2});

        const auto tight = build("circuit m(1) { h q[0]; x q[0]; z q[0]; }");
        CHECK(suggestPlacements(tight.diagram, 1).empty());
        CHECK_THROWS_AS(suggestPlacements(tight.diagram, 9), NotFoundError);
    }

    TEST_CASE("parallel gates share the column") {
        const auto b = build("circuit m(3) { h q[0]; h q[1]; x q[2]; z q[0]; }");
        CHECK(parallelGates(b.diagram, 0) == std::vector<SuperGateId>{1, 2});
        CHECK(parallelGates(b.diagram, 3).empty());
    }

    TEST_CASE("suggested moves keep per-qubit order") {
        std::mt19937_64 rng(21);
        for (int i = 0; i < 40; ++i) {
            const auto g = testing::randomProgram(rng);
            const auto d = segment(g.model, testing::randomFold(rng, g.model.semanticTree()));
            for (const auto &sg : d.superGates) {
                for (auto col : suggestPlacements(d, sg.id)) {
                    auto moved = d.columnOf;
                    moved[sg.id] = col;
                    const auto problems = testing::orderViolations(d, moved);
                    INFO(g.source);
                    REQUIRE(problems.empty());
                }
            }
        }
    }

    TEST_CASE("connectivity examples") {
        const auto one = build("circuit m(3) { cx q[0], q[1]; }");
        const auto c = connectivity(one.model);
        CHECK(c.n == 3);
        for (QubitId i = 0; i < 3; ++i) {
            for (QubitId j = 0; j < 3; ++j) {
                CHECK(c.at(i, j) == ((i + j == 1 && i != j) ? 1U : 0U));
            }
        }
        const auto chain = connectivity(ghz(4).model);
        for (QubitId i = 0; i < 4; ++i) {
            for (QubitId j = 0; j < 4; ++j) {
                CHECK(chain.at(i, j) == ((i + 1 == j || j + 1 == i) ? 1U : 0U));
            }
        }
        const auto single = connectivity(build("circuit m(2) { h q[0]; x q[1]; }").model);
        CHECK(std::all_of(single.counts.begin(), single.counts.end(), [](auto v) { return v == 0; }));
    }

    TEST_CASE("scoped connectivity") {
        const auto b = build(testing::readFixture("qugan.qv"), {{"n", 4}});
        CHECK(connectivity(b.model, SemanticTree::root()) == connectivity(b.model));
        const auto all = connectivity(b.model);
        for (const auto &node : b.model.semanticTree().nodes) {
            const auto scoped = connectivity(b.model, node.id);
            for (std::size_t k = 0; k < all.counts.size(); ++k) {
                CHECK(scoped.counts[k] <= all.counts[k]);
            }
        }
        CHECK_THROWS_AS(connectivity(b.model, 999), NotFoundError);
    }

    TEST_CASE("entanglement examples") {
        const auto one = build("circuit m(3) { cx q[0], q[1]; }");
        const auto h = entanglementHistory(one.model);
        REQUIRE(h.snapshots.size() == 2);
        CHECK(h.snapshots[0].timestamp == -1);
        CHECK(h.snapshots[0].groups == Partition{{0}, {1}, {2}});
        CHECK(h.snapshots[1].timestamp == 0);
        CHECK(h.snapshots[1].groups == Partition{{0, 1}, {2}});

        const auto g = entanglementHistory(ghz(4).model);
        CHECK(g.snapshots.back().groups == Partition{{0, 1, 2, 3}});

        const auto none = entanglementHistory(build("circuit m(2) { h q[0]; h q[1]; }").model);
        REQUIRE(none.snapshots.size() == 1);
        CHECK(none.snapshots[0].groups == Partition{{0}, {1}});
    }

    TEST_CASE("repeated merges add no snapshot") {
        const auto b = build("circuit m(3) { cx q[0], q[1]; cx q[1], q[0]; cx q[2], q[0]; }");
        const auto h = entanglementHistory(b.model);
        REQUIRE(h.snapshots.size() == 3);
        CHECK(h.snapshots[2].timestamp == 2);
    }

    TEST_CASE("context oracles on random circuits") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 30; ++i) {
            const auto m = testing::randomFlatCircuit(rng, 10, 40);
            const auto c = connectivity(m);
            const auto pairs = testing::pairCounts(m);
            for (QubitId a = 0; a < m.qubitCount; ++a) {
                for (QubitId b = 0; b < m.qubitCount; ++b) {
                    REQUIRE(c.at(a, b) == pairs[a][b]);
                }
            }
            const auto h = entanglementHistory(m);
            CHECK(h.snapshots.back().groups == testing::components(m));
            for (std::size_t s = 1; s < h.snapshots.size(); ++s) {
                CHECK(testing::coarsens(h.snapshots[s - 1].groups, h.snapshots[s].groups));
                CHECK(h.snapshots[s].groups ==
                      testing::components(m, static_cast<std::uint64_t>(h.snapshots[s].timestamp)));
            }
        }
    }
}
