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

/**
 * @file dsl.hpp
 * @brief Circuit DSL frontend: parser, semantic tree builder, interpreter and
 * loop pattern classifier.
 *
 * A program is a list of `def` blocks followed by one `circuit` block:
 *
 *     def layer(o) { h q[o]; cx q[o], q[o+1]; }
 *     circuit main(n) { for i in 0..n-1 { layer(i); } }
 *
 * The circuit header holds the qubit-count expression. Loop ranges are
 * half-open. Integer expressions support + - * / and parentheses over
 * literals, program parameters, function parameters and loop variables.
 * Gate angle arguments are kept verbatim as display labels.
 */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qcvine/circuit_model.hpp"
#include "qcvine/errors.hpp"
#include "qcvine/semantic_tree.hpp"

namespace qcvine::dsl {

using Params = std::map<std::string, std::int64_t>;

struct SourceProgram {
    std::string text;
    Params params;
};

struct SourceSpan {
    SourceLocation begin;
    SourceLocation end;
};

/// Integer expression tree.
struct Expr {
    enum class Op : std::uint8_t { Literal, Variable, Add, Sub, Mul, Div, Neg };

    Op op = Op::Literal;
    std::int64_t value = 0;
    std::string name;
    std::vector<Expr> args;
    SourceLocation location;

    std::string toString() const;
};

enum class AstKind : std::uint8_t { ProgramRoot, FuncDef, ForLoop, GateCall, FuncCall };

struct FuncDefMeta {
    std::string name;
    std::vector<std::string> params;
    bool isCircuit = false;
    Expr qubitCount;  // circuit only
};

struct ForLoopMeta {
    std::string var;
    Expr lo;
    Expr hi;
};

struct GateCallMeta {
    GateName gate = GateName::H;
    std::vector<std::string> angles;
    std::vector<Expr> operands;
};

struct FuncCallMeta {
    std::string callee;
    std::vector<Expr> args;
};

struct AstNode {
    int id = 0;  // preorder index, unique within one parse
    AstKind kind = AstKind::ProgramRoot;
    SourceSpan span;
    std::variant<std::monostate, FuncDefMeta, ForLoopMeta, GateCallMeta, FuncCallMeta> meta;
    std::vector<AstNode> children;

    const FuncDefMeta &funcDef() const { return std::get<FuncDefMeta>(meta); }
    const ForLoopMeta &forLoop() const { return std::get<ForLoopMeta>(meta); }
    const GateCallMeta &gateCall() const { return std::get<GateCallMeta>(meta); }
    const FuncCallMeta &funcCall() const { return std::get<FuncCallMeta>(meta); }
};

/// Parses program text. Throws SourceError with the position and the set of
/// tokens that would have been accepted.
AstNode parse(const std::string &text);

/// One node per circuit/function call site and per loop, in preorder. Throws
/// SourceError on calls to undefined functions, argument count mismatches and
/// recursion.
SemanticTree buildSemanticTree(const AstNode &ast);

/// Runs the circuit abstractly and records every gate with its timestamp and
/// the tree path active when it was emitted.
CircuitModel compile(const AstNode &ast, const SemanticTree &tree, const Params &params);

/// Returns a copy of `tree` with loop patterns filled from the gate footprints
/// observed in `model`.
SemanticTree classifyLoops(const SemanticTree &tree, const CircuitModel &model);

/// parse + buildSemanticTree + compile + classifyLoops. The returned model's
/// tree carries the repetition annotations.
CircuitModel compileProgram(const SourceProgram &program);

}  // namespace qcvine::dsl
