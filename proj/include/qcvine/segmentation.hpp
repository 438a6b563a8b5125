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
#include <set>
#include <string>
#include <vector>

#include "qcvine/circuit_model.hpp"

namespace qcvine {

using SuperGateId = std::uint32_t;

/// Set of unfolded tree nodes. The root is always treated as unfolded; a node
/// below a folded ancestor is inert.
struct FoldState {
    std::set<NodeId> unfolded;

    bool isUnfolded(NodeId node) const { return node == SemanticTree::root() || unfolded.contains(node); }

    /// Every node unfolded.
    static FoldState expandAll(const SemanticTree &tree);
    /// Nodes at depth <= `depth` unfolded (root has depth 0).
    static FoldState toDepth(const SemanticTree &tree, std::uint32_t depth);
    /// Throws NotFoundError if any id is not a node of `tree`.
    void check(const SemanticTree &tree) const;
    /// Stable 64-bit digest, used as a cache key.
    std::uint64_t hash() const;

    bool operator==(const FoldState &) const = default;
};

struct PathEntry {
    NodeId node = kNoNode;
    std::uint32_t occurrence = 0;
    std::int32_t iteration = -1;

    bool operator==(const PathEntry &) const = default;
    auto operator<=>(const PathEntry &) const = default;
};

enum class SuperGateKind : std::uint8_t { Primitive, Component };

std::string_view toString(SuperGateKind kind);

struct SuperGate {
    SuperGateId id = 0;
    std::string label;
    SuperGateKind kind = SuperGateKind::Primitive;
    std::vector<GateId> members;  // timestamp order
    NodeId node = kNoNode;        // owning tree node (label node of a component)
    std::uint32_t occurrence = 0;
    std::vector<QubitId> qubits;  // touched qubits, ascending
    std::uint64_t firstTimestamp = 0;
    /// Root-to-node path of the owning node, with occurrences and iterations.
    std::vector<PathEntry> path;
    /// Primitive gates only: the gate and its operands, for glyph drawing.
    GateName gate = GateName::H;
    std::vector<Operand> operands;
    std::vector<std::string> params;

    bool isComponent() const { return kind == SuperGateKind::Component; }
    /// Length of the path prefix that identifies the layout scope holding
    /// this gate: the owning node for primitives, its parent for components.
    std::size_t scopeDepth() const { return isComponent() ? path.size() - 1 : path.size(); }
};

struct SuperBit {
    std::uint32_t id = 0;
    QubitId from = 0;  // inclusive
    QubitId to = 0;    // inclusive

    std::uint32_t size() const { return to - from + 1; }
    bool operator==(const SuperBit &) const = default;
};

/// A laid-out scope: one occurrence of an unfolded node. Atoms are the super
/// gates placed directly in it; child scopes are concatenated after each
/// other and after runs of atoms, in time order.
struct LayoutScope {
    std::vector<PathEntry> path;
    std::uint32_t offset = 0;  // first global column
    std::uint32_t width = 0;
    std::vector<SuperGateId> atoms;
    std::vector<std::size_t> children;  // indices into ComponentDiagram::scopes
    bool isLeaf() const { return children.empty(); }
};

struct ComponentDiagram {
    std::uint32_t qubitCount = 0;
    std::vector<SuperGate> superGates;
    std::vector<SuperBit> superBits;
    std::vector<std::uint32_t> columnOf;  // indexed by SuperGateId
    std::uint32_t width = 0;
    std::vector<std::uint32_t> rowOfQubit;  // super bit index per qubit
    std::vector<LayoutScope> scopes;        // scopes[0] is the root scope

    const SuperGate &superGate(SuperGateId id) const;
    std::uint32_t column(SuperGateId id) const { return columnOf.at(id); }
    /// Super-bit rows touched by a super gate, ascending and distinct.
    std::vector<std::uint32_t> rowsOf(SuperGateId id) const;
};

/// Labels every gate with its shallowest folded ancestor and merges gates
/// sharing (label node, occurrence) into component super gates. Ids follow
/// the earliest member timestamp.
std::vector<SuperGate> groupGates(const CircuitModel &model, const FoldState &fold);

/// Maximal contiguous runs of qubits with identical super-gate sequences.
std::vector<SuperBit> bundleQubits(const CircuitModel &model, const std::vector<SuperGate> &superGates);

/// Bottom-up semantic layout. Also fills `superBits` via bundleQubits.
ComponentDiagram layout(const CircuitModel &model, std::vector<SuperGate> superGates);

/// groupGates + layout.
ComponentDiagram segment(const CircuitModel &model, const FoldState &fold);

}  // namespace qcvine
