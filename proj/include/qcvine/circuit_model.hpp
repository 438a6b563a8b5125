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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcvine/semantic_tree.hpp"

namespace qcvine {

using QubitId = std::uint32_t;
using GateId = std::uint32_t;

enum class GateName : std::uint8_t { H, X, Y, Z, S, T, RX, RY, RZ, RYY, CX, CZ, CRY, CRZ, SWAP, CSWAP, CCX };

enum class OperandRole : std::uint8_t { Plain, Control, Target };

/// Static signature of a gate: how many qubits it takes, how many angle
/// labels, and the role of each operand position.
struct GateKind {
    GateName name;
    std::string_view mnemonic;
    int arity;
    int params;
    std::span<const OperandRole> roles;
};

const GateKind &gateKind(GateName name);
std::optional<GateName> parseGateName(std::string_view mnemonic);
std::string_view toString(GateName name);
std::string_view toString(OperandRole role);
OperandRole parseOperandRole(std::string_view text);
std::span<const GateName> allGateNames();

struct Operand {
    QubitId qubit = 0;
    OperandRole role = OperandRole::Plain;

    bool operator==(const Operand &) const = default;
};

/// One dynamic gate emission. The three path vectors run in parallel from the
/// root to the emitting node: `occPath[i]` is the invocation counter of
/// `treePath[i]`, and `iterPath[i]` is the 0-based loop iteration when
/// `treePath[i]` is a loop (-1 otherwise).
struct GateInstance {
    GateId id = 0;
    GateName kind = GateName::H;
    std::vector<Operand> operands;
    std::vector<std::string> paramLabels;
    std::uint64_t timestamp = 0;
    std::vector<NodeId> treePath;
    std::vector<std::uint32_t> occPath;
    std::vector<std::int32_t> iterPath;

    NodeId owner() const { return treePath.empty() ? kNoNode : treePath.back(); }
    std::uint32_t occurrence() const { return occPath.empty() ? 0 : occPath.back(); }
    bool touches(QubitId q) const;
    bool isMultiQubit() const { return operands.size() > 1; }
    /// Operand qubits in ascending order.
    std::vector<QubitId> qubits() const;

    bool operator==(const GateInstance &) const = default;
};

/// Compiled circuit: qubit wires plus timestamp-ordered gates aligned to the
/// semantic tree. Treated as immutable once built.
struct CircuitModel {
    std::uint32_t qubitCount = 1;
    std::vector<GateInstance> gates;
    std::shared_ptr<const SemanticTree> tree;

    const SemanticTree &semanticTree() const;
    /// Throws NotFoundError when no gate has this id.
    const GateInstance &gate(GateId id) const;
};

/// Gates touching `q` in timestamp order. Throws NotFoundError when `q` is
/// not a wire of the model.
std::vector<const GateInstance *> gatesOnQubit(const CircuitModel &model, QubitId q);

struct Violation {
    std::optional<GateId> gate;
    std::string rule;

    bool operator==(const Violation &) const = default;
};

/// Checks every structural invariant of the model; empty result means valid.
std::vector<Violation> validate(const CircuitModel &model);

}  // namespace qcvine
