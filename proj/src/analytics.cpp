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

#include "qcvine/analytics.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

#include "qcvine/errors.hpp"

namespace qcvine {

namespace {

void checkQubit(const ComponentDiagram &diagram, QubitId q) {
    if (q >= diagram.qubitCount) {
        throw NotFoundError("qubit index out of range: " + std::to_string(q) + " (circuit has " +
                            std::to_string(diagram.qubitCount) + " qubits)");
    }
}

/// Super gates per wire, by column.
std::vector<std::vector<SuperGateId>> wireSequences(const ComponentDiagram &diagram) {
    std::vector<std::vector<SuperGateId>> wires(diagram.qubitCount);
    for (const auto &sg : diagram.superGates) {
        for (QubitId q : sg.qubits) {
            wires[q].push_back(sg.id);
        }
    }
    for (auto &w : wires) {
        std::stable_sort(w.begin(), w.end(),
                         [&](SuperGateId a, SuperGateId b) { return diagram.columnOf[a] < diagram.columnOf[b]; });
    }
    return wires;
}

std::vector<std::uint32_t> columnCounts(const ComponentDiagram &diagram) {
    std::vector<std::uint32_t> counts(diagram.width, 0);
    for (const auto &sg : diagram.superGates) {
        ++counts.at(diagram.columnOf[sg.id]);
    }
    return counts;
}

// Nearest-rank quartile cut points.
std::array<std::uint32_t, 3> quartiles(std::vector<std::uint32_t> values) {
    std::array<std::uint32_t, 3> cuts{0, 0, 0};
    if (values.empty()) {
        return cuts;
    }
    std::sort(values.begin(), values.end());
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t rank = ((k + 1) * values.size() + 3) / 4;  // ceil((k+1)/4 * n)
        cuts[k] = values[std::max<std::size_t>(rank, 1) - 1];
    }
    return cuts;
}

std::uint8_t quartileLevel(std::uint32_t value, const std::array<std::uint32_t, 3> &cuts) {
    if (value == 0) {
        return 0;
    }
    std::uint8_t level = 0;
    for (auto cut : cuts) {
        level += value > cut ? 1 : 0;
    }
    return level;
}

class DisjointSet {
   public:
    explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        // Smaller representative wins, which keeps groups easy to order.
        if (b < a) {
            std::swap(a, b);
        }
        parent_[b] = a;
        return true;
    }

    Partition groups() {
        std::vector<std::vector<QubitId>> byRoot(parent_.size());
        for (std::uint32_t q = 0; q < parent_.size(); ++q) {
            byRoot[find(q)].push_back(q);
        }
        Partition out;
        for (auto &g : byRoot) {
            if (!g.empty()) {
                out.push_back(std::move(g));
            }
        }
        return out;
    }

   private:
    std::vector<std::uint32_t> parent_;
};

}  // namespace

ProvenanceTimeline provenance(const ComponentDiagram &diagram, QubitId q) {
    checkQubit(diagram, q);
    ProvenanceTimeline timeline;
    timeline.qubit = q;
    timeline.span = diagram.width;
    for (const auto &sg : diagram.superGates) {
        if (std::binary_search(sg.qubits.begin(), sg.qubits.end(), q)) {
            timeline.events.push_back({sg.id, sg.label, diagram.columnOf[sg.id]});
        }
    }
    std::stable_sort(timeline.events.begin(), timeline.events.end(),
                     [](const auto &a, const auto &b) { return a.column < b.column; });
    return timeline;
}

std::uint8_t parallelismLevel(std::uint32_t p, std::uint32_t threshold, std::uint32_t maxParallelism) {
    if (p == 0) {
        return 0;
    }
    if (p < threshold) {
        if (threshold <= 2) {
            return 0;
        }
        return static_cast<std::uint8_t>(std::min<std::uint32_t>(1, 2 * (p - 1) / (threshold - 1)));
    }
    if (maxParallelism <= threshold) {
        return 4;
    }
    const std::uint32_t span = maxParallelism - threshold;
    return static_cast<std::uint8_t>(2 + std::min<std::uint32_t>(2, 2 * (std::min(p, maxParallelism) - threshold) / span));
}

PlacementContext placementContext(const ComponentDiagram &diagram, std::uint32_t threshold) {
    if (threshold < 1) {
        throw InvalidInputError("threshold must be at least 1");
    }
    PlacementContext ctx;
    ctx.threshold = threshold;
    ctx.parallelism = columnCounts(diagram);
    const std::uint32_t maxP =
        ctx.parallelism.empty() ? 0 : *std::max_element(ctx.parallelism.begin(), ctx.parallelism.end());
    for (auto p : ctx.parallelism) {
        ctx.levels.push_back(parallelismLevel(p, threshold, maxP));
    }

    const auto wires = wireSequences(diagram);
    ctx.idleExtent.assign(diagram.qubitCount, 0.0);
    for (QubitId q = 0; q < diagram.qubitCount; ++q) {
        const auto &seq = wires[q];
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const std::uint32_t col = diagram.columnOf[seq[i]];
            IdleSpan span;
            span.gate = seq[i];
            span.wire = q;
            span.before = i == 0 ? col : col - diagram.columnOf[seq[i - 1]] - 1;
            span.after = i + 1 == seq.size() ? diagram.width - col - 1 : diagram.columnOf[seq[i + 1]] - col - 1;
            ctx.idleSpans.push_back(span);
        }
        if (diagram.width > 0) {
            ctx.idleExtent[q] = static_cast<double>(diagram.width - seq.size()) / diagram.width;
        }
    }
    std::sort(ctx.idleSpans.begin(), ctx.idleSpans.end(),
              [](const IdleSpan &a, const IdleSpan &b) { return std::tie(a.gate, a.wire) < std::tie(b.gate, b.wire); });

    std::vector<std::uint32_t> lengths;
    for (const auto &s : ctx.idleSpans) {
        lengths.push_back(s.before);
        lengths.push_back(s.after);
    }
    const auto cuts = quartiles(std::move(lengths));
    for (auto &s : ctx.idleSpans) {
        s.beforeLevel = quartileLevel(s.before, cuts);
        s.afterLevel = quartileLevel(s.after, cuts);
    }
    return ctx;
}

std::vector<SuperGateId> parallelGates(const ComponentDiagram &diagram, SuperGateId gate) {
    const std::uint32_t col = diagram.column(diagram.superGate(gate).id);
    std::vector<SuperGateId> out;
    for (const auto &sg : diagram.superGates) {
        if (sg.id != gate && diagram.columnOf[sg.id] == col) {
            out.push_back(sg.id);
        }
    }
    return out;
}

std::vector<std::uint32_t> suggestPlacements(const ComponentDiagram &diagram, SuperGateId gate) {
    const SuperGate &target = diagram.superGate(gate);
    const std::uint32_t col = diagram.columnOf[gate];
    // Legal window: strictly after every earlier gate and strictly before every
    // later gate on the gate's own wires.
    std::int64_t lo = -1;
    std::int64_t hi = diagram.width;
    for (const auto &sg : diagram.superGates) {
        if (sg.id == gate) {
            continue;
        }
        bool shares = false;
        for (QubitId q : sg.qubits) {
            if (std::binary_search(target.qubits.begin(), target.qubits.end(), q)) {
                shares = true;
                break;
            }
        }
        if (!shares) {
            continue;
        }
        const std::int64_t c = diagram.columnOf[sg.id];
        if (c < col || (c == col && sg.id < gate)) {
            lo = std::max(lo, c);
        } else {
            hi = std::min(hi, c);
        }
    }
    const auto counts = columnCounts(diagram);
    std::vector<std::uint32_t> candidates;
    for (std::int64_t c = lo + 1; c < hi; ++c) {
        if (c != col) {
            candidates.push_back(static_cast<std::uint32_t>(c));
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return counts[a] < counts[b]; });
    return candidates;
}

ConnectivityMatrix connectivity(const CircuitModel &model, std::optional<NodeId> scope) {
    if (scope && !model.semanticTree().contains(*scope)) {
        throw NotFoundError("unknown tree node: " + std::to_string(*scope));
    }
    ConnectivityMatrix m;
    m.n = model.qubitCount;
    m.counts.assign(std::size_t{m.n} * m.n, 0);
    for (const auto &g : model.gates) {
        if (!g.isMultiQubit()) {
            continue;
        }
        if (scope && std::find(g.treePath.begin(), g.treePath.end(), *scope) == g.treePath.end()) {
            continue;
        }
        const auto qs = g.qubits();
        for (std::size_t a = 0; a < qs.size(); ++a) {
            for (std::size_t b = a + 1; b < qs.size(); ++b) {
                ++m.counts[std::size_t{qs[a]} * m.n + qs[b]];
                ++m.counts[std::size_t{qs[b]} * m.n + qs[a]];
            }
        }
    }
    return m;
}

EntanglementHistory entanglementHistory(const CircuitModel &model) {
    EntanglementHistory history;
    DisjointSet dsu(model.qubitCount);
    history.snapshots.push_back({-1, dsu.groups()});
    for (const auto &g : model.gates) {
        if (!g.isMultiQubit()) {
            continue;
        }
        bool merged = false;
        for (std::size_t i = 1; i < g.operands.size(); ++i) {
            merged = dsu.unite(g.operands[0].qubit, g.operands[i].qubit) || merged;
        }
        if (merged) {
            history.snapshots.push_back({static_cast<std::int64_t>(g.timestamp), dsu.groups()});
        }
    }
    return history;
}

}  // namespace qcvine
