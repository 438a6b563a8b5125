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
 * @file abstraction.hpp
 * @brief Repetition abstraction over a laid-out component diagram.
 *
 * The pipeline runs in four passes over a grid whose rows are rendered wires
 * (super bits) and whose columns are layout columns:
 *
 *   gridify    - one unit box or none per cell, everything invisible
 *   abbreviate - rows/columns of the first two and the last iteration of each
 *                abstractable repetition become visible, as do rows/columns
 *                of gates outside any repetition
 *   complete   - a gate is visible iff its column and all its rows are
 *   represent  - visible gates are compacted; each maximal invisible run
 *                becomes one ellipsis band with dot marks
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcvine/segmentation.hpp"

namespace qcvine {

/// A repetition whose middle iterations were hidden.
struct LegendEntry {
    NodeId node = kNoNode;
    std::string label;
    Direction direction = Direction::Vertical;
    std::uint32_t iterations = 0;

    bool operator==(const LegendEntry &) const = default;
};

struct Grid {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<std::int64_t> cells;  // row-major; super gate id or -1
    std::vector<bool> rowVisible;
    std::vector<bool> colVisible;
    std::vector<bool> gatePresent;  // indexed by SuperGateId
    std::vector<bool> gateVisible;  // set by complete()
    std::vector<std::vector<std::uint32_t>> gateRows;
    std::vector<std::uint32_t> gateCol;
    std::vector<LegendEntry> legend;  // repetitions hidden by abbreviate()

    std::int64_t cell(std::uint32_t row, std::uint32_t col) const { return cells.at(std::size_t{row} * cols + col); }
    std::size_t occupiedCells() const;
};

enum class BandAxis : std::uint8_t { Row, Col };

std::string_view toString(BandAxis axis);

struct EllipsisBand {
    BandAxis axis = BandAxis::Row;
    std::uint32_t from = 0;  // original index, inclusive
    std::uint32_t to = 0;    // inclusive
    std::uint32_t slot = 0;  // compacted index occupied by the band
    bool dotMark = true;

    std::uint32_t count() const { return to - from + 1; }
    bool operator==(const EllipsisBand &) const = default;
};

enum class DotOrientation : std::uint8_t { Vertical, Horizontal, Diagonal };

std::string_view toString(DotOrientation orientation);

/// Compacted cell where a hidden unit box is summarized by dots.
struct DotMark {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    DotOrientation orientation = DotOrientation::Vertical;

    auto operator<=>(const DotMark &) const = default;
};

struct AbstractGate {
    SuperGateId id = 0;
    std::string label;
    std::uint32_t row = 0;  // topmost compacted row
    std::uint32_t col = 0;
    std::vector<std::uint32_t> rows;  // compacted rows, ascending

    bool operator==(const AbstractGate &) const = default;
};

struct AbstractionDiagram {
    std::uint32_t rows = 0;  // compacted, including band slots
    std::uint32_t cols = 0;
    std::vector<AbstractGate> visibleGates;
    std::vector<EllipsisBand> ellipsisBands;
    std::vector<DotMark> dots;
    std::vector<LegendEntry> legend;
    /// Compacted slot of each original row/column (band slot when hidden).
    std::vector<std::uint32_t> rowSlot;
    std::vector<std::uint32_t> colSlot;
};

Grid gridify(const ComponentDiagram &diagram);

/// Marks the kept rows and columns. Repetitions come from the loop patterns
/// of the model's semantic tree; nested repetitions are handled
/// outermost-first. Hidden repetitions are recorded in `Grid::legend`.
Grid abbreviate(Grid grid, const ComponentDiagram &diagram, const CircuitModel &model);

Grid complete(Grid grid);

AbstractionDiagram represent(const Grid &grid, const ComponentDiagram &diagram);

/// All four passes.
AbstractionDiagram abstractDiagram(const ComponentDiagram &diagram, const CircuitModel &model);

/// The visible rows, columns and gates of a completed grid as a fresh grid
/// with all visibility cleared. Super gate ids are preserved.
Grid visibleSubgrid(const Grid &grid);

}  // namespace qcvine
