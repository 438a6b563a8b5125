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

#include "qcvine/segmentation.hpp"

#include <algorithm>
#include <map>
#include <variant>

#include "qcvine/errors.hpp"

namespace qcvine {

std::string_view toString(SuperGateKind kind) {
    return kind == SuperGateKind::Component ? "component" : "primitive";
}

FoldState FoldState::expandAll(const SemanticTree &tree) {
    FoldState fold;
    for (const auto &node : tree.nodes) {
        fold.unfolded.insert(node.id);
    }
    return fold;
}

FoldState FoldState::toDepth(const SemanticTree &tree, std::uint32_t depth) {
    FoldState fold;
    for (const auto &node : tree.nodes) {
        if (node.depth <= depth) {
            fold.unfolded.insert(node.id);
        }
    }
    return fold;
}

void FoldState::check(const SemanticTree &tree) const {
    for (NodeId id : unfolded) {
        if (!tree.contains(id)) {
            throw NotFoundError("unknown tree node: " + std::to_string(id));
        }
    }
}

std::uint64_t FoldState::hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    for (NodeId id : unfolded) {
        auto v = static_cast<std::uint32_t>(id);
        for (int b = 0; b < 4; ++b) {
            h ^= (v >> (8 * b)) & 0xFFU;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

const SuperGate &ComponentDiagram::superGate(SuperGateId id) const {
    if (id >= superGates.size()) {
        throw NotFoundError("unknown super gate: " + std::to_string(id));
    }
    return superGates[id];
}

std::vector<std::uint32_t> ComponentDiagram::rowsOf(SuperGateId id) const {
    std::vector<std::uint32_t> rows;
    for (QubitId q : superGate(id).qubits) {
        rows.push_back(rowOfQubit.at(q));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

std::vector<SuperGate> groupGates(const CircuitModel &model, const FoldState &fold) {
    const SemanticTree &tree = model.semanticTree();
    fold.check(tree);
    std::vector<SuperGate> out;
    std::map<std::pair<NodeId, std::uint32_t>, SuperGateId> components;

    auto entries = [](const GateInstance &g, std::size_t length) {
        std::vector<PathEntry> path;
        path.reserve(length);
        for (std::size_t d = 0; d < length; ++d) {
            path.push_back({g.treePath[d], g.occPath[d], g.iterPath[d]});
        }
        return path;
    };

    for (const auto &g : model.gates) {
        std::size_t foldedAt = g.treePath.size();
        for (std::size_t d = 0; d < g.treePath.size(); ++d) {
            if (!fold.isUnfolded(g.treePath[d])) {
                foldedAt = d;
                break;
            }
        }
        if (foldedAt == g.treePath.size()) {
            SuperGate sg;
            sg.id = static_cast<SuperGateId>(out.size());
            sg.label = std::string(toString(g.kind));
            sg.kind = SuperGateKind::Primitive;
            sg.members.push_back(g.id);
            sg.node = g.owner();
            sg.occurrence = g.occurrence();
            sg.qubits = g.qubits();
            sg.firstTimestamp = g.timestamp;
            sg.path = entries(g, g.treePath.size());
            sg.gate = g.kind;
            sg.operands = g.operands;
            sg.params = g.paramLabels;
            out.push_back(std::move(sg));
            continue;
        }
        const NodeId node = g.treePath[foldedAt];
        const std::uint32_t occ = g.occPath[foldedAt];
        auto [it, inserted] = components.try_emplace({node, occ}, static_cast<SuperGateId>(out.size()));
        if (inserted) {
            SuperGate sg;
            sg.id = it->second;
            sg.label = tree.node(node).label;
            sg.kind = SuperGateKind::Component;
            sg.node = node;
            sg.occurrence = occ;
            sg.firstTimestamp = g.timestamp;
            sg.path = entries(g, foldedAt + 1);
            // A folded loop box spans every iteration of its execution.
            sg.path.back().iteration = -1;
            out.push_back(std::move(sg));
        }
        SuperGate &sg = out[it->second];
        sg.members.push_back(g.id);
        for (const auto &op : g.operands) {
            sg.qubits.push_back(op.qubit);
        }
    }
    for (auto &sg : out) {
        std::sort(sg.qubits.begin(), sg.qubits.end());
        sg.qubits.erase(std::unique(sg.qubits.begin(), sg.qubits.end()), sg.qubits.end());
    }
    return out;
}

std::vector<SuperBit> bundleQubits(const CircuitModel &model, const std::vector<SuperGate> &superGates) {
    std::vector<std::vector<SuperGateId>> sequences(model.qubitCount);
    for (const auto &sg : superGates) {
        for (QubitId q : sg.qubits) {
            sequences.at(q).push_back(sg.id);
        }
    }
    std::vector<SuperBit> bits;
    for (QubitId q = 0; q < model.qubitCount; ++q) {
        if (!bits.empty() && sequences[q] == sequences[bits.back().to]) {
            bits.back().to = q;
            continue;
        }
        bits.push_back({static_cast<std::uint32_t>(bits.size()), q, q});
    }
    return bits;
}

namespace {

struct ScopeBuild {
    std::vector<std::variant<SuperGateId, std::size_t>> entries;  // atom or child scope
};

class Layouter {
   public:
    Layouter(const CircuitModel &model, ComponentDiagram &diagram)
        : diagram_(diagram), freeAt_(model.qubitCount, 0), stamp_(model.qubitCount, 0) {
    }

    void run() {
        LayoutScope root;
        root.path = {{SemanticTree::root(), 1, -1}};
        diagram_.scopes.push_back(std::move(root));
        builds_.emplace_back();
        index_.emplace(keyOf(diagram_.scopes[0].path, 1), 0);

        for (const auto &sg : diagram_.superGates) {
            const std::size_t scope = scopeFor(sg.path, sg.scopeDepth());
            builds_[scope].entries.emplace_back(sg.id);
            diagram_.scopes[scope].atoms.push_back(sg.id);
        }
        place(0, 0);
        diagram_.width = diagram_.scopes[0].width;
    }

   private:
    using Key = std::vector<std::pair<NodeId, std::uint32_t>>;

    static Key keyOf(const std::vector<PathEntry> &path, std::size_t length) {
        Key key;
        key.reserve(length);
        for (std::size_t d = 0; d < length; ++d) {
            key.emplace_back(path[d].node, path[d].occurrence);
        }
        return key;
    }

    std::size_t scopeFor(const std::vector<PathEntry> &path, std::size_t length) {
        auto it = index_.find(keyOf(path, length));
        if (it != index_.end()) {
            return it->second;
        }
        const std::size_t parent = scopeFor(path, length - 1);
        const std::size_t id = diagram_.scopes.size();
        LayoutScope scope;
        scope.path.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(length));
        // Scope identity is (node, occurrence); iterations only label gates.
        scope.path.back().iteration = -1;
        diagram_.scopes.push_back(std::move(scope));
        builds_.emplace_back();
        index_.emplace(keyOf(path, length), id);
        builds_[parent].entries.emplace_back(id);
        diagram_.scopes[parent].children.push_back(id);
        return id;
    }

    void place(std::size_t scope, std::uint32_t offset) {
        std::uint32_t cursor = offset;
        std::vector<SuperGateId> run;
        auto flush = [&] {
            if (run.empty()) {
                return;
            }
            ++currentStamp_;
            std::uint32_t runWidth = 0;
            for (SuperGateId id : run) {
                const auto &sg = diagram_.superGates[id];
                std::uint32_t col = 0;
                for (QubitId q : sg.qubits) {
                    if (stamp_[q] == currentStamp_) {
                        col = std::max(col, freeAt_[q]);
                    }
                }
                for (QubitId q : sg.qubits) {
                    stamp_[q] = currentStamp_;
                    freeAt_[q] = col + 1;
                }
                diagram_.columnOf[id] = cursor + col;
                runWidth = std::max(runWidth, col + 1);
            }
            cursor += runWidth;
            run.clear();
        };
        for (const auto &entry : builds_[scope].entries) {
            if (const auto *atom = std::get_if<SuperGateId>(&entry)) {
                run.push_back(*atom);
                continue;
            }
            flush();
            const std::size_t child = std::get<std::size_t>(entry);
            place(child, cursor);
            cursor += diagram_.scopes[child].width;
        }
        flush();
        diagram_.scopes[scope].offset = offset;
        diagram_.scopes[scope].width = cursor - offset;
    }

    ComponentDiagram &diagram_;
    std::vector<ScopeBuild> builds_;
    std::map<Key, std::size_t> index_;
    std::vector<std::uint32_t> freeAt_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t currentStamp_ = 0;
};

}  // namespace

ComponentDiagram layout(const CircuitModel &model, std::vector<SuperGate> superGates) {
    ComponentDiagram diagram;
    diagram.qubitCount = model.qubitCount;
    diagram.superBits = bundleQubits(model, superGates);
    diagram.rowOfQubit.assign(model.qubitCount, 0);
    for (const auto &bit : diagram.superBits) {
        for (QubitId q = bit.from; q <= bit.to; ++q) {
            diagram.rowOfQubit[q] = bit.id;
        }
    }
    for (std::size_t i = 0; i < superGates.size(); ++i) {
        if (superGates[i].id != i) {
            throw InvalidInputError("super gate ids must equal their index");
        }
    }
    diagram.superGates = std::move(superGates);
    diagram.columnOf.assign(diagram.superGates.size(), 0);
    Layouter(model, diagram).run();
    return diagram;
}

ComponentDiagram segment(const CircuitModel &model, const FoldState &fold) {
    return layout(model, groupGates(model, fold));
}

}  // namespace qcvine
