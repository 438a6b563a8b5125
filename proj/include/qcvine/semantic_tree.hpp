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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qcvine {

using NodeId = std::int32_t;
constexpr NodeId kNoNode = -1;

enum class NodeKind : std::uint8_t { Root, Function, Loop };

enum class Direction : std::uint8_t { Vertical, Horizontal, Diagonal };

std::string_view toString(NodeKind kind);
std::string_view toString(Direction direction);
NodeKind parseNodeKind(std::string_view text);
Direction parseDirection(std::string_view text);

/// Repetition detected for a loop node.
struct RepetitionKind {
    Direction direction = Direction::Vertical;
    std::uint32_t unitSize = 1;    // gates per iteration
    std::uint32_t iterations = 2;  // smallest iteration count over all executions
    bool abstractable = false;     // iterations >= 4

    bool operator==(const RepetitionKind &) const = default;
};

struct TreeNode {
    NodeId id = kNoNode;
    std::string label;
    NodeKind kind = NodeKind::Root;
    NodeId parent = kNoNode;
    std::uint32_t depth = 0;
    std::vector<NodeId> children;
    std::optional<RepetitionKind> pattern;
    /// Source line of the call site or loop header; 0 for the root.
    int line = 0;
    /// Parser id of the statement that introduced the node; -1 for the root.
    int site = -1;
};

/// Hierarchy of functions and loops extracted from a program. Node ids are
/// dense indices assigned in preorder, so the root is always node 0.
struct SemanticTree {
    std::vector<TreeNode> nodes;

    static constexpr NodeId root() { return 0; }
    std::size_t size() const { return nodes.size(); }
    bool contains(NodeId id) const { return id >= 0 && static_cast<std::size_t>(id) < nodes.size(); }

    /// Throws NotFoundError for unknown ids.
    const TreeNode &node(NodeId id) const;

    /// True when `ancestor` lies on the path from the root to `node` (inclusive).
    bool isAncestorOrSelf(NodeId ancestor, NodeId node) const;

    /// Root-to-node path.
    std::vector<NodeId> pathTo(NodeId id) const;

    /// A tree with only a root node labelled `label`.
    static SemanticTree singleRoot(std::string label = "root");
};

}  // namespace qcvine
