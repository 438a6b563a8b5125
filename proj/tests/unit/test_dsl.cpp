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

#include <algorithm>

#include "generators.hpp"
#include "qcvine/dsl.hpp"

using namespace qcvine;

namespace {

CircuitModel compile(const std::string &text, dsl::Params params = {}) {
    return dsl::compileProgram({text, std::move(params)});
}

std::string errorOf(const std::string &text, dsl::Params params = {}) {
    try {
        compile(text, std::move(params));
    } catch (const SourceError &e) {
        return e.format("t.qv");
    }
    return "";
}

const TreeNode &onlyLoop(const SemanticTree &tree) {
    const auto it = std::find_if(tree.nodes.begin(), tree.nodes.end(),
                                 [](const TreeNode &n) { return n.kind == NodeKind::Loop; });
    REQUIRE(it != tree.nodes.end());
    return *it;
}

std::optional<RepetitionKind> patternOf(const std::string &body, int qubits = 10) {
    const auto m = compile("circuit main(" + std::to_string(qubits) + ") {\n" + body + "\n}");
    return onlyLoop(m.semanticTree()).pattern;
}

}  // namespace

TEST_SUITE("dsl") {
    TEST_CASE("parse a single gate") {
        const auto ast = dsl::parse("circuit main(3){ h q[0]; }");
        CHECK(ast.kind == dsl::AstKind::ProgramRoot);
        REQUIRE(ast.children.size() == 1);
        const auto &main = ast.children[0];
        CHECK(main.kind == dsl::AstKind::FuncDef);
        CHECK(main.funcDef().name == "main");
        CHECK(main.funcDef().isCircuit);
        REQUIRE(main.children.size() == 1);
        const auto &gate = main.children[0];
        CHECK(gate.kind == dsl::AstKind::GateCall);
        CHECK((gate.gateCall().gate == GateName::H));
        REQUIRE(gate.gateCall().operands.size() == 1);
        CHECK(gate.gateCall().operands[0].op == dsl::Expr::Op::Literal);
        CHECK(gate.gateCall().operands[0].value == 0);
    }

    TEST_CASE("parse a loop") {
        const auto ast = dsl::parse("circuit main(n){ for i in 0..n { h q[i]; } }");
        const auto &main = ast.children.at(0);
        REQUIRE(main.children.size() == 1);
        CHECK(main.children[0].kind == dsl::AstKind::ForLoop);
        CHECK(main.children[0].forLoop().var == "i");
        CHECK(main.children[0].forLoop().hi.toString() == "n");
    }

    TEST_CASE("missing semicolon is a syntax error on line 1") {
        try {
            dsl::parse("circuit main(3){ h q[0] }");
            FAIL("expected a syntax error");
        } catch (const SourceError &e) {
            CHECK(e.location().line == 1);
            CHECK(e.format("x.qv").rfind("x.qv:1:", 0) == 0);
            CHECK(std::find(e.expected().begin(), e.expected().end(), "';'") != e.expected().end());
        }
    }

    TEST_CASE("lexical and structural errors carry positions") {
        CHECK(errorOf("circuit m(2) {\n  h q[0];\n  $ q[1];\n}").rfind("t.qv:3:3:", 0) == 0);
        CHECK(errorOf("circuit m(2) { h q[0], q[1]; }").find("takes 1") != std::string::npos);
        CHECK(errorOf("circuit m(2) { rx q[0]; }").find("takes 1") != std::string::npos);
        CHECK(errorOf("def f() { }\ndef f() { }\ncircuit m(1) { }").find("defined twice") != std::string::npos);
        CHECK(errorOf("circuit m(1) { g(); }").find("undefined function 'g'") != std::string::npos);
        CHECK(errorOf("def f(a) { }\ncircuit m(1) { f(); }").find("takes 1 argument") != std::string::npos);
        CHECK(errorOf("def f() { g(); }\ndef g() { f(); }\ncircuit m(1) { f(); }").find("recursive") !=
              std::string::npos);
        CHECK(errorOf("circuit m(2) { cx q[1], q[1]; }").find("distinct") != std::string::npos);
        CHECK(errorOf("circuit m(0) { }").find("positive qubit count") != std::string::npos);
        CHECK(errorOf("circuit m(2) { for i in 3..1 { h q[0]; } }").find("inverted") != std::string::npos);
        CHECK(errorOf("circuit m(2) { h q[1/0]; }").find("division by zero") != std::string::npos);
    }

    TEST_CASE("qubit index out of range") {
        const auto msg = errorOf("circuit main(2){ h q[5]; }");
        CHECK(msg.find("out of range") != std::string::npos);
        CHECK(msg.rfind("t.qv:1:", 0) == 0);
    }

    TEST_CASE("unbound parameter") {
        CHECK(errorOf(testing::readFixture("ghz.qv")).find("parameter unbound: n") != std::string::npos);
    }

    TEST_CASE("expressions") {
        const auto m = compile("circuit m(20) { h q[2+3*4]; h q[(2+3)*2]; h q[7/2]; h q[-1+3]; h q[n-n/2]; }",
                               {{"n", 7}});
        std::vector<QubitId> got;
        for (const auto &g : m.gates) {
            got.push_back(g.operands[0].qubit);
        }
        CHECK(got == std::vector<QubitId>{14, 10, 3, 2, 4});
    }

    TEST_CASE("angle labels are kept verbatim") {
        const auto m = compile("circuit m(2) { ry(theta[i+1]) q[0]; cry(pi/2) q[0], q[1]; }");
        CHECK(m.gates[0].paramLabels == std::vector<std::string>{"theta[i+1]"});
        CHECK(m.gates[1].paramLabels == std::vector<std::string>{"pi/2"});
        CHECK((m.gates[1].operands[0].role == OperandRole::Control));
        CHECK((m.gates[1].operands[1].role == OperandRole::Target));
    }

    TEST_CASE("semantic tree follows the static call structure") {
        const auto m = compile(
            "def g() { h q[0]; }\n"
            "def f() { g(); }\n"
            "circuit main(1) { f(); f(); }\n");
        const auto &t = m.semanticTree();
        REQUIRE(t.size() == 6);
        const auto &main = t.node(t.node(0).children.at(0));
        CHECK(main.label == "main");
        REQUIRE(main.children.size() == 2);
        for (NodeId f : main.children) {
            CHECK(t.node(f).label == "f");
            REQUIRE(t.node(f).children.size() == 1);
            CHECK(t.node(t.node(f).children[0]).label == "g");
        }
    }

    TEST_CASE("gate-only circuit has a childless main") {
        const auto m = compile("circuit main(2) { h q[0]; x q[1]; cx q[0], q[1]; }");
        CHECK(m.semanticTree().size() == 2);
        CHECK(m.semanticTree().node(1).children.empty());
    }

    TEST_CASE("single loop node is labelled by its line") {
        const auto m = compile("circuit main(4) {\n  for i in 0..4 { h q[i]; }\n}");
        const auto &t = m.semanticTree();
        REQUIRE(t.size() == 3);
        CHECK((t.node(2).kind == NodeKind::Loop));
        CHECK(t.node(2).label == "for@2");
        CHECK(t.node(2).parent == 1);
    }

    TEST_CASE("underscores in function names display as spaces") {
        const auto m = compile("def SWAP_Test() { h q[0]; }\ncircuit main(1) { SWAP_Test(); }");
        CHECK(m.semanticTree().node(2).label == "SWAP Test");
    }

    TEST_CASE("ghz trace") {
        const auto m = compile(testing::readFixture("ghz.qv"), {{"n", 3}});
        REQUIRE(m.gates.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(m.gates[i].timestamp == i);
            CHECK(m.gates[i].id == i);
        }
        const NodeId loop = onlyLoop(m.semanticTree()).id;
        CHECK(m.gates[1].owner() == loop);
        CHECK(m.gates[2].owner() == loop);
        CHECK(m.gates[1].iterPath.back() == 0);
        CHECK(m.gates[2].iterPath.back() == 1);
        CHECK(m.gates[1].occPath.back() == m.gates[2].occPath.back());
    }

    TEST_CASE("repeated calls share nodes and count occurrences") {
        const auto m = compile("def f() { h q[0]; }\ncircuit main(1) { f(); f(); }");
        REQUIRE(m.gates.size() == 2);
        // Two call sites: one node each.
        CHECK(m.gates[0].owner() != m.gates[1].owner());
        const auto n = compile("def f() { h q[0]; }\ncircuit main(1) { for i in 0..2 { f(); } }");
        REQUIRE(n.gates.size() == 2);
        CHECK(n.gates[0].treePath == n.gates[1].treePath);
        CHECK(n.gates[0].occurrence() == 1);
        CHECK(n.gates[1].occurrence() == 2);
    }

    TEST_CASE("canonical loop patterns") {
        auto v = patternOf("for i in 0..8 { h q[i]; }");
        REQUIRE(v);
        CHECK((v->direction == Direction::Vertical));
        CHECK(v->iterations == 8);
        CHECK(v->abstractable);

        auto h = patternOf("for i in 0..6 { rz(t) q[0]; }");
        REQUIRE(h);
        CHECK((h->direction == Direction::Horizontal));

        auto d = patternOf("for i in 0..9 { cx q[i], q[i+1]; }");
        REQUIRE(d);
        CHECK((d->direction == Direction::Diagonal));
        CHECK(d->unitSize == 1);
    }

    TEST_CASE("non-uniform loops have no pattern") {
        CHECK_FALSE(patternOf("for i in 0..4 { cx q[0], q[i+1]; }"));
        CHECK_FALSE(patternOf("for i in 0..4 { h q[i*i]; }"));
        CHECK_FALSE(patternOf("for i in 0..1 { h q[i]; }"));
    }

    TEST_CASE("three iterations are a pattern but not abstractable") {
        auto p = patternOf("for i in 0..3 { h q[i]; }");
        REQUIRE(p);
        CHECK(p->iterations == 3);
        CHECK_FALSE(p->abstractable);
    }

    TEST_CASE("iteration count is the minimum over executions") {
        const auto m = compile(
            "def layer(k) { for i in 0..k { h q[i]; } }\n"
            "circuit main(8) { for r in 0..2 { layer(6-3*r); } }");
        const auto &t = m.semanticTree();
        const TreeNode *inner = nullptr;
        for (const auto &n : t.nodes) {
            if (n.kind == NodeKind::Loop && t.node(n.parent).kind == NodeKind::Function && n.parent != 1) {
                inner = &n;
            }
        }
        REQUIRE(inner != nullptr);
        REQUIRE(inner->pattern);
        CHECK(inner->pattern->iterations == 3);
        CHECK_FALSE(inner->pattern->abstractable);
    }

    TEST_CASE("executions that disagree on direction clear the pattern") {
        const auto m = compile(
            "def layer(s) { for i in 0..4 { h q[s*i]; } }\n"
            "circuit main(8) { layer(1); layer(0); }");
        // Two call sites: separate loop nodes, separate verdicts.
        int vertical = 0;
        int horizontal = 0;
        for (const auto &n : m.semanticTree().nodes) {
            if (n.pattern) {
                vertical += n.pattern->direction == Direction::Vertical;
                horizontal += n.pattern->direction == Direction::Horizontal;
            }
        }
        CHECK(vertical == 1);
        CHECK(horizontal == 1);

        const auto shared = compile(
            "def layer(s) { for i in 0..4 { h q[s*i]; } }\n"
            "circuit main(8) { for s in 0..2 { layer(s); } }");
        for (const auto &n : shared.semanticTree().nodes) {
            if (n.kind == NodeKind::Loop && n.parent != 1) {
                CHECK_FALSE(n.pattern.has_value());
            }
        }
    }
}
