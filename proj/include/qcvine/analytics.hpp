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
#include <vector>

#include "qcvine/segmentation.hpp"

namespace qcvine {

struct ProvenanceEvent {
    SuperGateId superGate = 0;
    std::string label;
    std::uint32_t column = 0;

    bool operator==(const ProvenanceEvent &) const = default;
};

struct ProvenanceTimeline {
    QubitId qubit = 0;
    std::vector<ProvenanceEvent> events;  // by column
    std::uint32_t span = 0;               // diagram width
};

/// Super gates touching `q` at their layout columns. Throws NotFoundError
/// when `q` is not a wire.
ProvenanceTimeline provenance(const ComponentDiagram &diagram, QubitId q);

/// Empty columns on one wire immediately before and after a super gate.
struct IdleSpan {
    SuperGateId gate = 0;
    QubitId wire = 0;
    std::uint32_t before = 0;
    std::uint32_t after = 0;
    std::uint8_t beforeLevel = 0;  // quartile bin 0..3 over observed lengths
    std::uint8_t afterLevel = 0;

    bool operator==(const IdleSpan &) const = default;
};

constexpr std::uint8_t kParallelismLevels = 5;

struct PlacementContext {
    std::uint32_t threshold = 1;
    std::vector<std::uint32_t> parallelism;  // super gates per column
    std::vector<std::uint8_t> levels;        // 0..4; levels >= 2 are at or above the threshold
    std::vector<IdleSpan> idleSpans;         // by gate id, then wire
    std::vector<double> idleExtent;          // per qubit, fraction of idle columns
};

/// Maps parallelism `p` to a level in [0, 4]. Values below `threshold` land in
/// {0, 1}; values at or above it in {2, 3, 4}.
std::uint8_t parallelismLevel(std::uint32_t p, std::uint32_t threshold, std::uint32_t maxParallelism);

/// Throws InvalidInputError when threshold < 1.
PlacementContext placementContext(const ComponentDiagram &diagram, std::uint32_t threshold);

/// Same-column super gates of `gate`, excluding itself.
std::vector<SuperGateId> parallelGates(const ComponentDiagram &diagram, SuperGateId gate);

/// Columns the gate could move to without changing per-qubit order and
/// without colliding on its wires, ranked by ascending destination
/// parallelism, then column. Throws NotFoundError for unknown gates.
std::vector<std::uint32_t> suggestPlacements(const ComponentDiagram &diagram, SuperGateId gate);

/// Symmetric counts of multi-qubit gates per qubit pair.
struct ConnectivityMatrix {
    std::uint32_t n = 0;
    std::vector<std::uint32_t> counts;  // row-major n*n

    std::uint32_t at(QubitId i, QubitId j) const { return counts.at(std::size_t{i} * n + j); }
    bool operator==(const ConnectivityMatrix &) const = default;
};

/// Counts over gates whose tree path contains `scope` (all gates when
/// absent). Throws NotFoundError for unknown scopes.
ConnectivityMatrix connectivity(const CircuitModel &model, std::optional<NodeId> scope = std::nullopt);

using Partition = std::vector<std::vector<QubitId>>;  // groups ascending, ordered by first member

struct EntanglementSnapshot {
    std::int64_t timestamp = -1;  // -1 for the initial state
    Partition groups;

    bool operator==(const EntanglementSnapshot &) const = default;
};

struct EntanglementHistory {
    std::vector<EntanglementSnapshot> snapshots;
};

/// Structural entanglement: groups merge along multi-qubit gates. A snapshot
/// is recorded whenever the partition changes.
EntanglementHistory entanglementHistory(const CircuitModel &model);

}  // namespace qcvine
