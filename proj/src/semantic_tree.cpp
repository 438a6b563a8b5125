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

#include "qcvine/semantic_tree.hpp"

#include <algorithm>

#include "qcvine/errors.hpp"

namespace qcvine {

std::string_view toString(NodeKind kind) {
    switch (kind) {
        case NodeKind::Function:
            return "function";
        case NodeKind::Loop:
            return "loop";
        case NodeKind::Root:
            break;
    }
    return "root";
}

std::string_view toString(Direction direction) {
    switch (direction) {
        case Direction::Horizontal:
            return "horizontal";
        case Direction::Diagonal:
            return "diagonal";
        case Direction::Vertical:
            break;
    }
    return "vertical";
}

NodeKind parseNodeKind(std::string_view text) {
    if (text == "root") {
        return NodeKind::Root;
    }
    if (text == "function") {
        return NodeKind::Function;
    }
    if (text == "loop") {
        return NodeKind::Loop;
    }
    throw InvalidInputError("unknown node kind: " + std::string(text));
}

Direction parseDirection(std::string_view text) {
    if (text == "vertical") {
        return Direction::Vertical;
    }
    if (text == "horizontal") {
        return Direction::Horizontal;
    }
    if (text == "diagonal") {
        return Direction::Diagonal;
    }
    throw InvalidInputError("unknown repetition direction: " + std::string(text));
}

const TreeNode &SemanticTree::node(NodeId id) const {
    if (!contains(id)) {
        throw NotFoundError("unknown tree node: " + std::to_string(id));
    }
    return nodes[static_cast<std::size_t>(id)];
}

bool SemanticTree::isAncestorOrSelf(NodeId ancestor, NodeId id) const {
    while (contains(id)) {
        if (id == ancestor) {
            return true;
        }
        id = nodes[static_cast<std::size_t>(id)].parent;
    }
    return false;
}

std::vector<NodeId> SemanticTree::pathTo(NodeId id) const {
    std::vector<NodeId> path;
    for (NodeId cur = node(id).id; cur != kNoNode; cur = nodes[static_cast<std::size_t>(cur)].parent) {
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

SemanticTree SemanticTree::singleRoot(std::string label) {
    SemanticTree tree;
    TreeNode root;
    root.id = 0;
    root.label = std::move(label);
    root.kind = NodeKind::Root;
    tree.nodes.push_back(std::move(root));
    return tree;
}

}  // namespace qcvine
