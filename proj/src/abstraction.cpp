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

#include "qcvine/abstraction.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qcvine {

namespace {

constexpr std::size_t kMinAbstractIterations = 4;

using ExecKey = std::vector<std::pair<NodeId, std::uint32_t>>;

ExecKey execKey(const SuperGate &sg, std::size_t depth) {
    ExecKey key;
    key.reserve(depth + 1);
    for (std::size_t d = 0; d <= depth; ++d) {
        key.emplace_back(sg.path[d].node, sg.path[d].occurrence);
    }
    return key;
}

class Abbreviator {
   public:
    Abbreviator(Grid &grid, const ComponentDiagram &diagram, const SemanticTree &tree)
        : grid_(grid), diagram_(diagram), tree_(tree) {
    }

    void run() {
        std::vector<SuperGateId> all;
        for (SuperGateId id = 0; id < grid_.gatePresent.size(); ++id) {
            if (grid_.gatePresent[id]) {
                all.push_back(id);
            }
        }
        process(all, 0);
        // Wires that carry no unit box have nothing to abstract.
        std::vector<bool> rowUsed(grid_.rows, false);
        std::vector<bool> colUsed(grid_.cols, false);
        for (SuperGateId id : all) {
            for (auto r : grid_.gateRows[id]) {
                rowUsed[r] = true;
            }
            colUsed[grid_.gateCol[id]] = true;
        }
        for (std::uint32_t r = 0; r < grid_.rows; ++r) {
            if (!rowUsed[r]) {
                grid_.rowVisible[r] = true;
            }
        }
        for (std::uint32_t c = 0; c < grid_.cols; ++c) {
            if (!colUsed[c]) {
                grid_.colVisible[c] = true;
            }
        }
        for (const auto &[node, entry] : legend_) {
            grid_.legend.push_back(entry);
        }
    }

   private:
    bool repetitive(NodeId node) const {
        const auto &n = tree_.node(node);
        return n.kind == NodeKind::Loop && n.pattern.has_value();
    }

    void mark(SuperGateId id) {
        for (auto r : grid_.gateRows[id]) {
            grid_.rowVisible[r] = true;
        }
        grid_.colVisible[grid_.gateCol[id]] = true;
    }

    /// Finds, for every gate of `group`, the outermost repetitive loop at or
    /// below path depth `from` that encloses it, and applies the keep rule.
    void process(const std::vector<SuperGateId> &group, std::size_t from) {
        std::map<std::pair<ExecKey, std::size_t>, std::map<std::int32_t, std::vector<SuperGateId>>> executions;
        for (SuperGateId id : group) {
            const SuperGate &sg = diagram_.superGates[id];
            bool enclosed = false;
            for (std::size_t d = from; d < sg.scopeDepth(); ++d) {
                if (repetitive(sg.path[d].node)) {
                    executions[{execKey(sg, d), d}][sg.path[d].iteration].push_back(id);
                    enclosed = true;
                    break;
                }
            }
            if (!enclosed) {
                mark(id);
            }
        }
        for (const auto &[key, iterations] : executions) {
            const std::size_t depth = key.second;
            if (iterations.size() < kMinAbstractIterations) {
                std::vector<SuperGateId> members;
                for (const auto &[it, ids] : iterations) {
                    members.insert(members.end(), ids.begin(), ids.end());
                }
                process(members, depth + 1);
                continue;
            }
            std::vector<std::int32_t> order;
            for (const auto &[it, ids] : iterations) {
                order.push_back(it);
            }
            const std::set<std::int32_t> kept{order[0], order[1], order.back()};
            for (const auto &[it, ids] : iterations) {
                if (kept.contains(it)) {
                    process(ids, depth + 1);
                }
            }
            const NodeId node = key.first[depth].first;
            const auto &treeNode = tree_.node(node);
            auto &entry = legend_[node];
            entry.node = node;
            entry.label = treeNode.label;
            entry.direction = treeNode.pattern->direction;
            entry.iterations = std::max(entry.iterations, static_cast<std::uint32_t>(iterations.size()));
        }
    }

    Grid &grid_;
    const ComponentDiagram &diagram_;
    const SemanticTree &tree_;
    std::map<NodeId, LegendEntry> legend_;
};

}  // namespace

std::string_view toString(BandAxis axis) {
    return axis == BandAxis::Row ? "row" : "col";
}

std::string_view toString(DotOrientation orientation) {
    switch (orientation) {
        case DotOrientation::Horizontal:
            return "horizontal";
        case DotOrientation::Diagonal:
            return "diagonal";
        case DotOrientation::Vertical:
            break;
    }
    return "vertical";
}

std::size_t Grid::occupiedCells() const {
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](std::int64_t c) { return c >= 0; }));
}

Grid gridify(const ComponentDiagram &diagram) {
    Grid grid;
    grid.rows = static_cast<std::uint32_t>(diagram.superBits.size());
    grid.cols = diagram.width;
    grid.cells.assign(std::size_t{grid.rows} * grid.cols, -1);
    grid.rowVisible.assign(grid.rows, false);
    grid.colVisible.assign(grid.cols, false);
    const std::size_t n = diagram.superGates.size();
    grid.gatePresent.assign(n, true);
    grid.gateVisible.assign(n, false);
    grid.gateRows.resize(n);
    grid.gateCol.resize(n);
    for (SuperGateId id = 0; id < n; ++id) {
        grid.gateRows[id] = diagram.rowsOf(id);
        grid.gateCol[id] = diagram.columnOf[id];
        for (auto r : grid.gateRows[id]) {
            grid.cells[std::size_t{r} * grid.cols + grid.gateCol[id]] = id;
        }
    }
    return grid;
}

Grid abbreviate(Grid grid, const ComponentDiagram &diagram, const CircuitModel &model) {
    grid.legend.clear();
    Abbreviator(grid, diagram, model.semanticTree()).run();
    return grid;
}

Grid complete(Grid grid) {
    for (SuperGateId id = 0; id < grid.gatePresent.size(); ++id) {
        if (!grid.gatePresent[id]) {
            grid.gateVisible[id] = false;
            continue;
        }
        bool visible = grid.colVisible[grid.gateCol[id]];
        for (auto r : grid.gateRows[id]) {
            visible = visible && grid.rowVisible[r];
        }
        grid.gateVisible[id] = visible;
    }
    return grid;
}

namespace {

std::vector<std::uint32_t> compact(const std::vector<bool> &visible, BandAxis axis, std::vector<EllipsisBand> &bands) {
    std::vector<std::uint32_t> slot(visible.size(), 0);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < visible.size();) {
        if (visible[i]) {
            slot[i++] = next++;
            continue;
        }
        std::uint32_t j = i;
        while (j < visible.size() && !visible[j]) {
            slot[j++] = next;
        }
        bands.push_back({axis, i, j - 1, next, true});
        ++next;
        i = j;
    }
    return slot;
}

}  // namespace

AbstractionDiagram represent(const Grid &grid, const ComponentDiagram &diagram) {
    AbstractionDiagram out;
    std::vector<EllipsisBand> rowBands;
    std::vector<EllipsisBand> colBands;
    out.rowSlot = compact(grid.rowVisible, BandAxis::Row, rowBands);
    out.colSlot = compact(grid.colVisible, BandAxis::Col, colBands);
    out.rows = grid.rows == 0 ? 0 : out.rowSlot.back() + 1;
    out.cols = grid.cols == 0 ? 0 : out.colSlot.back() + 1;
    out.ellipsisBands = rowBands;
    out.ellipsisBands.insert(out.ellipsisBands.end(), colBands.begin(), colBands.end());
    out.legend = grid.legend;

    std::set<DotMark> dots;
    for (SuperGateId id = 0; id < grid.gatePresent.size(); ++id) {
        if (!grid.gatePresent[id]) {
            continue;
        }
        const std::uint32_t col = grid.gateCol[id];
        if (grid.gateVisible[id]) {
            AbstractGate gate;
            gate.id = id;
            gate.label = diagram.superGate(id).label;
            gate.col = out.colSlot[col];
            for (auto r : grid.gateRows[id]) {
                gate.rows.push_back(out.rowSlot[r]);
            }
            gate.rows.erase(std::unique(gate.rows.begin(), gate.rows.end()), gate.rows.end());
            gate.row = gate.rows.empty() ? 0 : gate.rows.front();
            out.visibleGates.push_back(std::move(gate));
            continue;
        }
        const bool colShown = grid.colVisible[col];
        for (auto r : grid.gateRows[id]) {
            const bool rowShown = grid.rowVisible[r];
            if (rowShown && colShown) {
                continue;
            }
            DotOrientation orientation = DotOrientation::Diagonal;
            if (rowShown) {
                orientation = DotOrientation::Horizontal;
            } else if (colShown) {
                orientation = DotOrientation::Vertical;
            }
            dots.insert({out.rowSlot[r], out.colSlot[col], orientation});
        }
    }
    out.dots.assign(dots.begin(), dots.end());
    return out;
}

AbstractionDiagram abstractDiagram(const ComponentDiagram &diagram, const CircuitModel &model) {
    return represent(complete(abbreviate(gridify(diagram), diagram, model)), diagram);
}

Grid visibleSubgrid(const Grid &grid) {
    Grid sub;
    std::vector<std::uint32_t> rowIndex(grid.rows, 0);
    std::vector<std::uint32_t> colIndex(grid.cols, 0);
    for (std::uint32_t r = 0; r < grid.rows; ++r) {
        if (grid.rowVisible[r]) {
            rowIndex[r] = sub.rows++;
        }
    }
    for (std::uint32_t c = 0; c < grid.cols; ++c) {
        if (grid.colVisible[c]) {
            colIndex[c] = sub.cols++;
        }
    }
    sub.cells.assign(std::size_t{sub.rows} * sub.cols, -1);
    sub.rowVisible.assign(sub.rows, false);
    sub.colVisible.assign(sub.cols, false);
    const std::size_t n = grid.gatePresent.size();
    sub.gatePresent.assign(n, false);
    sub.gateVisible.assign(n, false);
    sub.gateRows.resize(n);
    sub.gateCol.assign(n, 0);
    for (SuperGateId id = 0; id < n; ++id) {
        if (!grid.gatePresent[id] || !grid.gateVisible[id]) {
            continue;
        }
        sub.gatePresent[id] = true;
        sub.gateCol[id] = colIndex[grid.gateCol[id]];
        for (auto r : grid.gateRows[id]) {
            sub.gateRows[id].push_back(rowIndex[r]);
            sub.cells[std::size_t{rowIndex[r]} * sub.cols + sub.gateCol[id]] = id;
        }
    }
    return sub;
}

}  // namespace qcvine
