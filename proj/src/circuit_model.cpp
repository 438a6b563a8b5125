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

#include "qcvine/circuit_model.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "qcvine/errors.hpp"

namespace qcvine {

namespace {

constexpr std::array<OperandRole, 1> kOne{OperandRole::Plain};
constexpr std::array<OperandRole, 2> kPair{OperandRole::Plain, OperandRole::Plain};
constexpr std::array<OperandRole, 2> kControlled{OperandRole::Control, OperandRole::Target};
constexpr std::array<OperandRole, 3> kControlledPair{OperandRole::Control, OperandRole::Target, OperandRole::Target};
constexpr std::array<OperandRole, 3> kToffoli{OperandRole::Control, OperandRole::Control, OperandRole::Target};

const std::array<GateKind, 17> kGateKinds{{
    {GateName::H, "h", 1, 0, kOne},
    {GateName::X, "x", 1, 0, kOne},
    {GateName::Y, "y", 1, 0, kOne},
    {GateName::Z, "z", 1, 0, kOne},
    {GateName::S, "s", 1, 0, kOne},
    {GateName::T, "t", 1, 0, kOne},
    {GateName::RX, "rx", 1, 1, kOne},
    {GateName::RY, "ry", 1, 1, kOne},
    {GateName::RZ, "rz", 1, 1, kOne},
    {GateName::RYY, "ryy", 2, 1, kPair},
    {GateName::CX, "cx", 2, 0, kControlled},
    {GateName::CZ, "cz", 2, 0, kControlled},
    {GateName::CRY, "cry", 2, 1, kControlled},
    {GateName::CRZ, "crz", 2, 1, kControlled},
    {GateName::SWAP, "swap", 2, 0, kPair},
    {GateName::CSWAP, "cswap", 3, 0, kControlledPair},
    {GateName::CCX, "ccx", 3, 0, kToffoli},
}};

const std::array<GateName, 17> kAllNames = [] {
    std::array<GateName, 17> names{};
    for (std::size_t i = 0; i < kGateKinds.size(); ++i) {
        names[i] = kGateKinds[i].name;
    }
    return names;
}();

}  // namespace

const GateKind &gateKind(GateName name) {
    return kGateKinds[static_cast<std::size_t>(name)];
}

std::optional<GateName> parseGateName(std::string_view mnemonic) {
    for (const auto &kind : kGateKinds) {
        if (kind.mnemonic == mnemonic) {
            return kind.name;
        }
    }
    return std::nullopt;
}

std::string_view toString(GateName name) {
    return gateKind(name).mnemonic;
}

std::span<const GateName> allGateNames() {
    return kAllNames;
}

std::string_view toString(OperandRole role) {
    switch (role) {
        case OperandRole::Control:
            return "control";
        case OperandRole::Target:
            return "target";
        case OperandRole::Plain:
            break;
    }
    return "plain";
}

OperandRole parseOperandRole(std::string_view text) {
    if (text == "control") {
        return OperandRole::Control;
    }
    if (text == "target") {
        return OperandRole::Target;
    }
    if (text == "plain") {
        return OperandRole::Plain;
    }
    throw InvalidInputError("unknown operand role: " + std::string(text));
}

bool GateInstance::touches(QubitId q) const {
    return std::any_of(operands.begin(), operands.end(), [q](const Operand &op) { return op.qubit == q; });
}

std::vector<QubitId> GateInstance::qubits() const {
    std::vector<QubitId> result;
    result.reserve(operands.size());
    for (const auto &op : operands) {
        result.push_back(op.qubit);
    }
    std::sort(result.begin(), result.end());
    return result;
}

const SemanticTree &CircuitModel::semanticTree() const {
    if (!tree) {
        throw NotFoundError("circuit model has no semantic tree");
    }
    return *tree;
}

const GateInstance &CircuitModel::gate(GateId id) const {
    // Compiled models use id == index; imported ones may not.
    if (id < gates.size() && gates[id].id == id) {
        return gates[id];
    }
    for (const auto &g : gates) {
        if (g.id == id) {
            return g;
        }
    }
    throw NotFoundError("unknown gate id: " + std::to_string(id));
}

std::vector<const GateInstance *> gatesOnQubit(const CircuitModel &model, QubitId q) {
    if (q >= model.qubitCount) {
        throw NotFoundError("qubit out of range: " + std::to_string(q) + " (circuit has " +
                            std::to_string(model.qubitCount) + " qubits)");
    }
    std::vector<const GateInstance *> result;
    for (const auto &g : model.gates) {
        if (g.touches(q)) {
            result.push_back(&g);
        }
    }
    return result;
}

std::vector<Violation> validate(const CircuitModel &model) {
    std::vector<Violation> out;
    if (model.qubitCount == 0) {
        out.push_back({std::nullopt, "qubit count must be positive"});
    }
    std::unordered_set<GateId> ids;
    const SemanticTree *tree = model.tree.get();
    for (std::size_t i = 0; i < model.gates.size(); ++i) {
        const auto &g = model.gates[i];
        if (!ids.insert(g.id).second) {
            out.push_back({g.id, "gate id not unique"});
        }
        if (i > 0) {
            const auto previous = model.gates[i - 1].timestamp;
            if (g.timestamp == previous) {
                out.push_back({g.id, "timestamp not unique"});
            } else if (g.timestamp < previous) {
                out.push_back({g.id, "timestamps not increasing"});
            }
        }
        const auto &kind = gateKind(g.kind);
        if (static_cast<int>(g.operands.size()) != kind.arity) {
            out.push_back({g.id, "operand count does not match gate arity"});
        }
        for (std::size_t a = 0; a < g.operands.size(); ++a) {
            if (g.operands[a].qubit >= model.qubitCount) {
                out.push_back({g.id, "operand qubit out of range"});
            }
            for (std::size_t b = a + 1; b < g.operands.size(); ++b) {
                if (g.operands[a].qubit == g.operands[b].qubit) {
                    out.push_back({g.id, "operands not distinct"});
                }
            }
        }
        if (g.treePath.empty()) {
            out.push_back({g.id, "tree path empty"});
            continue;
        }
        if (g.treePath.front() != SemanticTree::root()) {
            out.push_back({g.id, "tree path does not begin at root"});
        }
        if (g.occPath.size() != g.treePath.size() || g.iterPath.size() != g.treePath.size()) {
            out.push_back({g.id, "path vectors differ in length"});
        }
        if (tree != nullptr) {
            for (std::size_t d = 0; d < g.treePath.size(); ++d) {
                const NodeId n = g.treePath[d];
                if (!tree->contains(n)) {
                    out.push_back({g.id, "tree path references unknown node"});
                    break;
                }
                if (d > 0 && tree->nodes[n].parent != g.treePath[d - 1]) {
                    out.push_back({g.id, "tree path is not a root-to-node chain"});
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace qcvine
