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

#include "qcvine/json_io.hpp"

#include <limits>

#include "qcvine/errors.hpp"

namespace qcvine {

namespace {

Json pathJson(const std::vector<PathEntry> &path) {
    Json out = Json::array();
    for (const auto &e : path) {
        out.push_back({{"node", e.node}, {"occ", e.occurrence}, {"iter", e.iteration}});
    }
    return out;
}

template <typename T>
T boundedInt(const Json &v, std::int64_t lo, std::int64_t hi, const char *what) {
    if (!v.is_number_integer()) {
        throw InvalidInputError(std::string(what) + " must be an integer");
    }
    const auto x = v.get<std::int64_t>();
    if (x < lo || x > hi) {
        throw InvalidInputError(std::string(what) + " out of range: " + std::to_string(x));
    }
    return static_cast<T>(x);
}

// Wraps nlohmann's exceptions (missing keys, wrong types) into ours.
template <typename F>
auto guarded(F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInputError(std::string("malformed JSON: ") + e.what());
    }
}

void checkModel(const CircuitModel &model) {
    const auto violations = validate(model);
    if (!violations.empty()) {
        const auto &v = violations.front();
        std::string where = v.gate ? " (gate " + std::to_string(*v.gate) + ")" : "";
        throw InvalidInputError("invalid circuit model: " + v.rule + where);
    }
}

Operand operandFromJson(const Json &j, const GateKind &kind, std::size_t position) {
    Operand op;
    if (j.is_object()) {
        op.qubit = boundedInt<QubitId>(j.at("q"), 0, std::numeric_limits<QubitId>::max(), "qubit");
        op.role = j.contains("role") ? parseOperandRole(j.at("role").get<std::string>())
                                     : kind.roles[std::min(position, kind.roles.size() - 1)];
    } else {
        op.qubit = boundedInt<QubitId>(j, 0, std::numeric_limits<QubitId>::max(), "qubit");
        op.role = kind.roles[std::min(position, kind.roles.size() - 1)];
    }
    return op;
}

GateName gateNameFromJson(const Json &j) {
    const auto name = j.get<std::string>();
    const auto parsed = parseGateName(name);
    if (!parsed) {
        throw InvalidInputError("unknown gate: " + name);
    }
    return *parsed;
}

}  // namespace

Json toJson(const SemanticTree &tree) {
    Json nodes = Json::array();
    for (const auto &n : tree.nodes) {
        Json node;
        node["id"] = n.id;
        node["label"] = n.label;
        node["kind"] = toString(n.kind);
        node["parent"] = n.parent;
        node["depth"] = n.depth;
        node["line"] = n.line;
        node["site"] = n.site;
        node["children"] = n.children;
        if (n.pattern) {
            node["pattern"] = {{"direction", toString(n.pattern->direction)},
                               {"unitSize", n.pattern->unitSize},
                               {"iterations", n.pattern->iterations},
                               {"abstractable", n.pattern->abstractable}};
        } else {
            node["pattern"] = nullptr;
        }
        nodes.push_back(std::move(node));
    }
    return {{"root", SemanticTree::root()}, {"nodes", std::move(nodes)}};
}

Json toJson(const CircuitModel &model) {
    Json gates = Json::array();
    for (const auto &g : model.gates) {
        Json ops = Json::array();
        for (const auto &op : g.operands) {
            ops.push_back({{"q", op.qubit}, {"role", toString(op.role)}});
        }
        Json gate;
        gate["id"] = g.id;
        gate["kind"] = toString(g.kind);
        gate["operands"] = std::move(ops);
        gate["params"] = g.paramLabels;
        gate["t"] = g.timestamp;
        gate["treePath"] = g.treePath;
        gate["occ"] = g.occurrence();
        gate["occPath"] = g.occPath;
        gate["iterPath"] = g.iterPath;
        gates.push_back(std::move(gate));
    }
    Json out;
    out["qubits"] = model.qubitCount;
    out["gates"] = std::move(gates);
    out["tree"] = toJson(model.semanticTree());
    return out;
}

Json toJson(const ComponentDiagram &diagram) {
    Json bits = Json::array();
    for (const auto &b : diagram.superBits) {
        bits.push_back({{"id", b.id}, {"from", b.from}, {"to", b.to}});
    }
    Json gates = Json::array();
    for (const auto &sg : diagram.superGates) {
        Json gate;
        gate["id"] = sg.id;
        gate["label"] = sg.label;
        gate["kind"] = toString(sg.kind);
        gate["col"] = diagram.columnOf[sg.id];
        gate["qubits"] = sg.qubits;
        gate["rows"] = diagram.rowsOf(sg.id);
        gate["node"] = sg.node;
        gate["occ"] = sg.occurrence;
        gate["size"] = sg.members.size();
        gate["path"] = pathJson(sg.path);
        gates.push_back(std::move(gate));
    }
    Json scopes = Json::array();
    for (const auto &s : diagram.scopes) {
        scopes.push_back({{"path", pathJson(s.path)},
                          {"offset", s.offset},
                          {"width", s.width},
                          {"atoms", s.atoms},
                          {"children", s.children}});
    }
    Json out;
    out["qubits"] = diagram.qubitCount;
    out["superBits"] = std::move(bits);
    out["superGates"] = std::move(gates);
    out["width"] = diagram.width;
    out["scopes"] = std::move(scopes);
    return out;
}

Json toJson(const AbstractionDiagram &diagram) {
    Json gates = Json::array();
    for (const auto &g : diagram.visibleGates) {
        gates.push_back({{"id", g.id}, {"label", g.label}, {"row", g.row}, {"col", g.col}, {"rows", g.rows}});
    }
    Json bands = Json::array();
    for (const auto &b : diagram.ellipsisBands) {
        bands.push_back(
            {{"axis", toString(b.axis)}, {"from", b.from}, {"to", b.to}, {"count", b.count()}, {"slot", b.slot}});
    }
    Json dots = Json::array();
    for (const auto &d : diagram.dots) {
        dots.push_back({{"row", d.row}, {"col", d.col}, {"orientation", toString(d.orientation)}});
    }
    Json legend = Json::array();
    for (const auto &l : diagram.legend) {
        legend.push_back({{"node", l.node},
                          {"label", l.label},
                          {"direction", toString(l.direction)},
                          {"iterations", l.iterations}});
    }
    Json out;
    out["rows"] = diagram.rows;
    out["cols"] = diagram.cols;
    out["gates"] = std::move(gates);
    out["bands"] = std::move(bands);
    out["dots"] = std::move(dots);
    out["legend"] = std::move(legend);
    return out;
}

Json toJson(const ProvenanceTimeline &timeline) {
    Json events = Json::array();
    for (const auto &e : timeline.events) {
        events.push_back({{"gate", e.superGate}, {"label", e.label}, {"col", e.column}});
    }
    return {{"qubit", timeline.qubit}, {"span", timeline.span}, {"events", std::move(events)}};
}

Json toJson(const PlacementContext &context) {
    Json idle = Json::array();
    for (const auto &s : context.idleSpans) {
        idle.push_back({{"gate", s.gate},
                        {"wire", s.wire},
                        {"before", s.before},
                        {"after", s.after},
                        {"beforeLevel", s.beforeLevel},
                        {"afterLevel", s.afterLevel}});
    }
    Json out;
    out["threshold"] = context.threshold;
    out["parallelism"] = context.parallelism;
    out["levels"] = context.levels;
    out["idleExtent"] = context.idleExtent;
    out["idle"] = std::move(idle);
    return out;
}

Json toJson(const ConnectivityMatrix &matrix) {
    Json cells = Json::array();
    for (QubitId i = 0; i < matrix.n; ++i) {
        for (QubitId j = i + 1; j < matrix.n; ++j) {
            if (const auto c = matrix.at(i, j); c > 0) {
                cells.push_back({i, j, c});
            }
        }
    }
    return {{"n", matrix.n}, {"cells", std::move(cells)}};
}

Json toJson(const EntanglementHistory &history) {
    Json snapshots = Json::array();
    for (const auto &s : history.snapshots) {
        snapshots.push_back({{"t", s.timestamp}, {"groups", s.groups}});
    }
    return {{"snapshots", std::move(snapshots)}};
}

Json suggestionsToJson(SuperGateId gate, const std::vector<std::uint32_t> &columns,
                       const std::vector<SuperGateId> &parallel) {
    return {{"gate", gate}, {"columns", columns}, {"parallel", parallel}};
}

SemanticTree treeFromJson(const Json &json) {
    return guarded([&] {
        SemanticTree tree;
        const auto &nodes = json.at("nodes");
        if (!nodes.is_array() || nodes.empty()) {
            throw InvalidInputError("tree must have at least a root node");
        }
        const auto limit = static_cast<std::int64_t>(nodes.size()) - 1;
        for (const auto &j : nodes) {
            TreeNode n;
            n.id = boundedInt<NodeId>(j.at("id"), 0, limit, "node id");
            n.label = j.at("label").get<std::string>();
            n.kind = parseNodeKind(j.at("kind").get<std::string>());
            n.parent = boundedInt<NodeId>(j.at("parent"), -1, limit, "node parent");
            n.line = j.contains("line") ? j.at("line").get<int>() : 0;
            n.site = j.contains("site") ? j.at("site").get<int>() : -1;
            if (j.contains("pattern") && !j.at("pattern").is_null()) {
                const auto &p = j.at("pattern");
                RepetitionKind r;
                r.direction = parseDirection(p.at("direction").get<std::string>());
                r.unitSize = p.at("unitSize").get<std::uint32_t>();
                r.iterations = p.at("iterations").get<std::uint32_t>();
                r.abstractable = r.iterations >= 4;  // derived, not trusted
                n.pattern = r;
            }
            if (n.id != static_cast<NodeId>(tree.nodes.size())) {
                throw InvalidInputError("tree node ids must be dense and in order");
            }
            tree.nodes.push_back(std::move(n));
        }
        // Preorder ids: parents precede children. Depths and child lists are
        // rebuilt rather than trusted.
        for (auto &n : tree.nodes) {
            if (n.id == 0) {
                if (n.parent != kNoNode || n.kind != NodeKind::Root) {
                    throw InvalidInputError("node 0 must be the root");
                }
                continue;
            }
            if (n.parent < 0 || n.parent >= n.id || n.kind == NodeKind::Root) {
                throw InvalidInputError("invalid parent for tree node " + std::to_string(n.id));
            }
            auto &parent = tree.nodes[static_cast<std::size_t>(n.parent)];
            n.depth = parent.depth + 1;
            parent.children.push_back(n.id);
        }
        return tree;
    });
}

CircuitModel modelFromJson(const Json &json) {
    return guarded([&] {
        CircuitModel model;
        model.qubitCount = boundedInt<std::uint32_t>(json.at("qubits"), 1, 1 << 24, "qubit count");
        model.tree = std::make_shared<const SemanticTree>(treeFromJson(json.at("tree")));
        for (const auto &j : json.at("gates")) {
            GateInstance g;
            g.id = boundedInt<GateId>(j.at("id"), 0, std::numeric_limits<GateId>::max(), "gate id");
            g.kind = gateNameFromJson(j.at("kind"));
            const auto &kind = gateKind(g.kind);
            const auto &ops = j.at("operands");
            for (std::size_t i = 0; i < ops.size(); ++i) {
                g.operands.push_back(operandFromJson(ops[i], kind, i));
            }
            g.paramLabels = j.at("params").get<std::vector<std::string>>();
            g.timestamp = j.at("t").get<std::uint64_t>();
            g.treePath = j.at("treePath").get<std::vector<NodeId>>();
            g.occPath = j.at("occPath").get<std::vector<std::uint32_t>>();
            g.iterPath = j.at("iterPath").get<std::vector<std::int32_t>>();
            model.gates.push_back(std::move(g));
        }
        checkModel(model);
        return model;
    });
}

CircuitModel importFlat(const Json &json) {
    return guarded([&] {
        CircuitModel model;
        model.qubitCount = boundedInt<std::uint32_t>(json.at("qubits"), 1, 1 << 24, "qubit count");
        model.tree = std::make_shared<const SemanticTree>(SemanticTree::singleRoot());
        GateId next = 0;
        for (const auto &j : json.at("gates")) {
            GateInstance g;
            g.id = next;
            g.timestamp = next;
            ++next;
            g.kind = gateNameFromJson(j.at("kind"));
            const auto &kind = gateKind(g.kind);
            const auto &ops = j.at("operands");
            for (std::size_t i = 0; i < ops.size(); ++i) {
                g.operands.push_back(operandFromJson(ops[i], kind, i));
            }
            if (j.contains("params")) {
                g.paramLabels = j.at("params").get<std::vector<std::string>>();
            }
            if (static_cast<int>(g.paramLabels.size()) != kind.params) {
                throw InvalidInputError("gate " + std::string(kind.mnemonic) + " expects " +
                                        std::to_string(kind.params) + " angle(s)");
            }
            g.treePath = {SemanticTree::root()};
            g.occPath = {1};
            g.iterPath = {-1};
            model.gates.push_back(std::move(g));
        }
        checkModel(model);
        return model;
    });
}

Json parseJson(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidInputError(std::string("invalid JSON: ") + e.what());
    }
}

std::string dumpJson(const Json &json) {
    return json.dump(2) + "\n";
}

}  // namespace qcvine
