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

#include <algorithm>
#include <map>
#include <unordered_map>

#include "qcvine/dsl.hpp"

namespace qcvine::dsl {

namespace {

constexpr std::size_t kMaxTreeNodes = std::size_t{1} << 20;
constexpr std::size_t kMaxGates = 5'000'000;

using FunctionTable = std::unordered_map<std::string, const AstNode *>;

struct ProgramParts {
    FunctionTable functions;
    const AstNode *circuit = nullptr;
};

ProgramParts split(const AstNode &ast) {
    if (ast.kind != AstKind::ProgramRoot) {
        throw Error("expected a program root node");
    }
    ProgramParts parts;
    for (const auto &child : ast.children) {
        const auto &def = child.funcDef();
        if (def.isCircuit) {
            parts.circuit = &child;
        } else {
            parts.functions.emplace(def.name, &child);
        }
    }
    if (parts.circuit == nullptr) {
        throw Error("program has no circuit block");
    }
    return parts;
}

// Identifiers cannot hold spaces; `SWAP_Test` is shown as "SWAP Test".
std::string displayLabel(std::string name) {
    std::replace(name.begin(), name.end(), '_', ' ');
    return name;
}

class TreeBuilder {
   public:
    explicit TreeBuilder(const ProgramParts &parts) : parts_(parts) {
    }

    SemanticTree build() {
        tree_ = SemanticTree::singleRoot("root");
        const AstNode &circuit = *parts_.circuit;
        const NodeId main = add(0, circuit.funcDef().name, NodeKind::Function, circuit.span.begin.line, circuit.id);
        stack_.push_back(circuit.funcDef().name);
        walk(circuit.children, main);
        stack_.pop_back();
        return std::move(tree_);
    }

   private:
    NodeId add(NodeId parent, std::string label, NodeKind kind, int line, int site) {
        if (tree_.nodes.size() >= kMaxTreeNodes) {
            throw SourceError({line, 1}, "semantic tree too large");
        }
        TreeNode node;
        node.id = static_cast<NodeId>(tree_.nodes.size());
        node.label = std::move(label);
        node.kind = kind;
        node.parent = parent;
        node.depth = tree_.nodes[static_cast<std::size_t>(parent)].depth + 1;
        node.line = line;
        node.site = site;
        tree_.nodes.push_back(std::move(node));
        tree_.nodes[static_cast<std::size_t>(parent)].children.push_back(tree_.nodes.back().id);
        return tree_.nodes.back().id;
    }

    void walk(const std::vector<AstNode> &stmts, NodeId parent) {
        for (const auto &stmt : stmts) {
            switch (stmt.kind) {
                case AstKind::ForLoop: {
                    const int line = stmt.span.begin.line;
                    const NodeId loop = add(parent, "for@" + std::to_string(line), NodeKind::Loop, line, stmt.id);
                    walk(stmt.children, loop);
                    break;
                }
                case AstKind::FuncCall: {
                    const auto &call = stmt.funcCall();
                    auto it = parts_.functions.find(call.callee);
                    if (it == parts_.functions.end()) {
                        throw SourceError(stmt.span.begin, "call to undefined function '" + call.callee + "'");
                    }
                    const auto &def = it->second->funcDef();
                    if (def.params.size() != call.args.size()) {
                        throw SourceError(stmt.span.begin, "function '" + call.callee + "' takes " +
                                                               std::to_string(def.params.size()) + " argument(s), got " +
                                                               std::to_string(call.args.size()));
                    }
                    if (std::find(stack_.begin(), stack_.end(), call.callee) != stack_.end()) {
                        throw SourceError(stmt.span.begin, "recursive call to '" + call.callee + "' is not supported");
                    }
                    const NodeId child =
                        add(parent, displayLabel(call.callee), NodeKind::Function, stmt.span.begin.line, stmt.id);
                    stack_.push_back(call.callee);
                    walk(it->second->children, child);
                    stack_.pop_back();
                    break;
                }
                default:
                    break;
            }
        }
    }

    const ProgramParts &parts_;
    SemanticTree tree_;
    std::vector<std::string> stack_;
};

std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

class Interpreter {
   public:
    Interpreter(const ProgramParts &parts, const SemanticTree &tree, const Params &params)
        : parts_(parts), tree_(tree), globals_(params), occurrences_(tree.size(), 0) {
        for (const auto &node : tree.nodes) {
            if (node.parent != kNoNode) {
                childBySite_.emplace(std::make_pair(node.parent, node.site), node.id);
            }
        }
    }

    CircuitModel run() {
        const AstNode &circuit = *parts_.circuit;
        const std::int64_t qubits = eval(circuit.funcDef().qubitCount);
        if (qubits <= 0) {
            throw SourceError(circuit.span.begin, "circuit must have a positive qubit count, got " + std::to_string(qubits));
        }
        if (qubits > (std::int64_t{1} << 24)) {
            throw SourceError(circuit.span.begin, "qubit count too large: " + std::to_string(qubits));
        }
        model_.qubitCount = static_cast<std::uint32_t>(qubits);
        model_.tree = std::make_shared<const SemanticTree>(tree_);

        enter(SemanticTree::root(), -1);
        const NodeId main = child(SemanticTree::root(), circuit.id);
        enter(main, -1);
        exec(circuit.children);
        leave();
        leave();
        return std::move(model_);
    }

   private:
    NodeId child(NodeId parent, int site) const {
        auto it = childBySite_.find({parent, site});
        if (it == childBySite_.end()) {
            throw Error("semantic tree does not match the program");
        }
        return it->second;
    }

    void enter(NodeId node, std::int32_t iteration) {
        path_.push_back(node);
        occ_.push_back(++occurrences_[static_cast<std::size_t>(node)]);
        iter_.push_back(iteration);
    }

    void leave() {
        path_.pop_back();
        occ_.pop_back();
        iter_.pop_back();
    }

    std::int64_t lookup(const Expr &e) const {
        for (auto it = frame_.rbegin(); it != frame_.rend(); ++it) {
            if (it->first == e.name) {
                return it->second;
            }
        }
        auto global = globals_.find(e.name);
        if (global == globals_.end()) {
            throw SourceError(e.location, "parameter unbound: " + e.name);
        }
        return global->second;
    }

    std::int64_t eval(const Expr &e) const {
        std::int64_t out = 0;
        switch (e.op) {
            case Expr::Op::Literal:
                return e.value;
            case Expr::Op::Variable:
                return lookup(e);
            case Expr::Op::Neg:
                if (__builtin_sub_overflow(std::int64_t{0}, eval(e.args[0]), &out)) {
                    throw SourceError(e.location, "integer overflow");
                }
                return out;
            case Expr::Op::Add:
                if (__builtin_add_overflow(eval(e.args[0]), eval(e.args[1]), &out)) {
                    throw SourceError(e.location, "integer overflow");
                }
                return out;
            case Expr::Op::Sub:
                if (__builtin_sub_overflow(eval(e.args[0]), eval(e.args[1]), &out)) {
                    throw SourceError(e.location, "integer overflow");
                }
                return out;
            case Expr::Op::Mul:
                if (__builtin_mul_overflow(eval(e.args[0]), eval(e.args[1]), &out)) {
                    throw SourceError(e.location, "integer overflow");
                }
                return out;
            case Expr::Op::Div: {
                const std::int64_t lhs = eval(e.args[0]);
                const std::int64_t rhs = eval(e.args[1]);
                if (rhs == 0) {
                    throw SourceError(e.location, "division by zero");
                }
                return floorDiv(lhs, rhs);
            }
        }
        return 0;
    }

    void exec(const std::vector<AstNode> &stmts) {
        for (const auto &stmt : stmts) {
            switch (stmt.kind) {
                case AstKind::GateCall:
                    emit(stmt);
                    break;
                case AstKind::ForLoop:
                    loop(stmt);
                    break;
                case AstKind::FuncCall:
                    call(stmt);
                    break;
                default:
                    throw Error("unexpected statement kind");
            }
        }
    }

    void emit(const AstNode &stmt) {
        const auto &meta = stmt.gateCall();
        const auto &kind = gateKind(meta.gate);
        if (model_.gates.size() >= kMaxGates) {
            throw SourceError(stmt.span.begin, "gate limit exceeded (" + std::to_string(kMaxGates) + ")");
        }
        GateInstance g;
        g.id = static_cast<GateId>(model_.gates.size());
        g.kind = meta.gate;
        g.paramLabels = meta.angles;
        g.timestamp = model_.gates.size();
        for (std::size_t i = 0; i < meta.operands.size(); ++i) {
            const std::int64_t q = eval(meta.operands[i]);
            if (q < 0 || q >= static_cast<std::int64_t>(model_.qubitCount)) {
                throw SourceError(meta.operands[i].location, "qubit index out of range: " + std::to_string(q) +
                                                                 " (circuit has " + std::to_string(model_.qubitCount) +
                                                                 " qubits)");
            }
            const auto qubit = static_cast<QubitId>(q);
            if (g.touches(qubit)) {
                throw SourceError(meta.operands[i].location,
                                  "gate operands must be distinct, q[" + std::to_string(q) + "] repeated");
            }
            g.operands.push_back({qubit, kind.roles[i]});
        }
        g.treePath = path_;
        g.occPath = occ_;
        g.iterPath = iter_;
        model_.gates.push_back(std::move(g));
    }

    void loop(const AstNode &stmt) {
        const auto &meta = stmt.forLoop();
        const std::int64_t lo = eval(meta.lo);
        const std::int64_t hi = eval(meta.hi);
        if (lo < 0) {
            throw SourceError(meta.lo.location, "negative loop range start: " + std::to_string(lo));
        }
        if (hi < lo) {
            throw SourceError(meta.hi.location,
                              "inverted loop range: " + std::to_string(lo) + ".." + std::to_string(hi));
        }
        if (hi == lo) {
            return;
        }
        const NodeId node = child(path_.back(), stmt.id);
        enter(node, 0);
        frame_.emplace_back(meta.var, lo);
        for (std::int64_t i = lo; i < hi; ++i) {
            frame_.back().second = i;
            iter_.back() = static_cast<std::int32_t>(i - lo);
            exec(stmt.children);
        }
        frame_.pop_back();
        leave();
    }

    void call(const AstNode &stmt) {
        const auto &meta = stmt.funcCall();
        const AstNode &def = *parts_.functions.at(meta.callee);
        const auto &params = def.funcDef().params;
        Frame frame;
        frame.reserve(params.size());
        for (std::size_t i = 0; i < params.size(); ++i) {
            frame.emplace_back(params[i], eval(meta.args[i]));
        }
        const NodeId node = child(path_.back(), stmt.id);
        enter(node, -1);
        std::swap(frame, frame_);
        exec(def.children);
        std::swap(frame, frame_);
        leave();
    }

    using Frame = std::vector<std::pair<std::string, std::int64_t>>;

    const ProgramParts &parts_;
    const SemanticTree &tree_;
    const Params &globals_;
    std::map<std::pair<NodeId, int>, NodeId> childBySite_;
    std::vector<std::uint32_t> occurrences_;
    std::vector<NodeId> path_;
    std::vector<std::uint32_t> occ_;
    std::vector<std::int32_t> iter_;
    Frame frame_;
    CircuitModel model_;
};

/// Gates of one loop execution, bucketed by iteration.
struct Execution {
    std::map<std::int32_t, std::vector<const GateInstance *>> iterations;
};

std::optional<RepetitionKind> classifyExecution(const Execution &exec) {
    const auto &its = exec.iterations;
    if (its.size() < 2) {
        return std::nullopt;
    }
    // Every iteration must emit; a gap means the footprint is not uniform.
    if (its.begin()->first != 0 || its.rbegin()->first != static_cast<std::int32_t>(its.size()) - 1) {
        return std::nullopt;
    }
    std::vector<std::vector<QubitId>> footprints;
    const auto &first = its.begin()->second;
    for (const auto &[index, gates] : its) {
        if (gates.size() != first.size()) {
            return std::nullopt;
        }
        for (std::size_t g = 0; g < gates.size(); ++g) {
            if (gates[g]->kind != first[g]->kind) {
                return std::nullopt;
            }
        }
        std::vector<QubitId> fp;
        for (const auto *g : gates) {
            for (const auto &op : g->operands) {
                fp.push_back(op.qubit);
            }
        }
        std::sort(fp.begin(), fp.end());
        fp.erase(std::unique(fp.begin(), fp.end()), fp.end());
        footprints.push_back(std::move(fp));
    }
    std::optional<std::int64_t> shift;
    for (std::size_t i = 0; i + 1 < footprints.size(); ++i) {
        const auto &a = footprints[i];
        const auto &b = footprints[i + 1];
        if (a.size() != b.size() || a.empty()) {
            return std::nullopt;
        }
        const std::int64_t s = static_cast<std::int64_t>(b[0]) - static_cast<std::int64_t>(a[0]);
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (static_cast<std::int64_t>(b[k]) - static_cast<std::int64_t>(a[k]) != s) {
                return std::nullopt;
            }
        }
        if (shift && *shift != s) {
            return std::nullopt;
        }
        shift = s;
    }
    RepetitionKind kind;
    if (*shift == 0) {
        kind.direction = Direction::Horizontal;
    } else {
        const auto &a = footprints[0];
        const auto &b = footprints[1];
        std::vector<QubitId> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        kind.direction = common.empty() ? Direction::Vertical : Direction::Diagonal;
    }
    kind.unitSize = static_cast<std::uint32_t>(first.size());
    kind.iterations = static_cast<std::uint32_t>(its.size());
    kind.abstractable = kind.iterations >= 4;
    return kind;
}

}  // namespace

SemanticTree buildSemanticTree(const AstNode &ast) {
    const ProgramParts parts = split(ast);
    return TreeBuilder(parts).build();
}

CircuitModel compile(const AstNode &ast, const SemanticTree &tree, const Params &params) {
    const ProgramParts parts = split(ast);
    return Interpreter(parts, tree, params).run();
}

SemanticTree classifyLoops(const SemanticTree &tree, const CircuitModel &model) {
    SemanticTree out = tree;
    // (loop node, occurrence) -> execution
    std::map<std::pair<NodeId, std::uint32_t>, Execution> executions;
    for (const auto &g : model.gates) {
        for (std::size_t d = 0; d < g.treePath.size(); ++d) {
            const NodeId n = g.treePath[d];
            if (!tree.contains(n) || tree.nodes[static_cast<std::size_t>(n)].kind != NodeKind::Loop) {
                continue;
            }
            executions[{n, g.occPath[d]}].iterations[g.iterPath[d]].push_back(&g);
        }
    }
    std::map<NodeId, std::optional<RepetitionKind>> verdicts;
    for (const auto &[key, exec] : executions) {
        const NodeId node = key.first;
        auto kind = classifyExecution(exec);
        auto it = verdicts.find(node);
        if (it == verdicts.end()) {
            verdicts.emplace(node, kind);
            continue;
        }
        auto &current = it->second;
        if (!current) {
            continue;
        }
        if (!kind || kind->direction != current->direction || kind->unitSize != current->unitSize) {
            current.reset();
            continue;
        }
        current->iterations = std::min(current->iterations, kind->iterations);
        current->abstractable = current->iterations >= 4;
    }
    for (auto &node : out.nodes) {
        node.pattern.reset();
        if (node.kind != NodeKind::Loop) {
            continue;
        }
        auto it = verdicts.find(node.id);
        if (it != verdicts.end()) {
            node.pattern = it->second;
        }
    }
    return out;
}

CircuitModel compileProgram(const SourceProgram &program) {
    const AstNode ast = parse(program.text);
    const SemanticTree tree = buildSemanticTree(ast);
    CircuitModel model = compile(ast, tree, program.params);
    model.tree = std::make_shared<const SemanticTree>(classifyLoops(tree, model));
    return model;
}

}  // namespace qcvine::dsl
