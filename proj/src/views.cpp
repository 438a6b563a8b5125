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

#include "qcvine/views.hpp"

#include <array>
#include <charconv>

#include "qcvine/errors.hpp"

namespace qcvine {

namespace {

constexpr std::array<std::pair<View, std::string_view>, 8> kViews{{
    {View::Structure, "structure"},
    {View::Component, "component"},
    {View::Abstraction, "abstraction"},
    {View::Provenance, "provenance"},
    {View::Placement, "placement"},
    {View::Suggest, "suggest"},
    {View::Connectivity, "connectivity"},
    {View::Entanglement, "entanglement"},
}};

ViewOutput json(const Json &j) {
    return {"application/json", dumpJson(j)};
}

ViewOutput svg(std::string body) {
    return {"image/svg+xml", std::move(body)};
}

}  // namespace

std::string_view toString(View view) {
    for (const auto &[v, name] : kViews) {
        if (v == view) {
            return name;
        }
    }
    return "component";
}

View parseView(std::string_view name) {
    for (const auto &[v, text] : kViews) {
        if (text == name) {
            return v;
        }
    }
    throw InvalidInputError("unknown view: " + std::string(name));
}

ViewOutput produceView(const CircuitModel &model, const ComponentDiagram &diagram, const ViewOptions &options,
                       const RenderTheme &theme) {
    switch (options.view) {
        case View::Structure:
            // The tree has no diagram form; both formats get the JSON.
            return json(toJson(model.semanticTree()));
        case View::Component:
            return options.json ? json(toJson(diagram)) : svg(renderComponent(diagram, theme));
        case View::Abstraction: {
            const auto ad = abstractDiagram(diagram, model);
            return options.json ? json(toJson(ad)) : svg(renderAbstraction(ad, diagram, theme));
        }
        case View::Provenance: {
            if (!options.qubit) {
                throw InvalidInputError("provenance needs a qubit");
            }
            const auto timeline = provenance(diagram, *options.qubit);
            return options.json ? json(toJson(timeline)) : svg(renderProvenance(timeline, theme));
        }
        case View::Placement: {
            const auto ctx = placementContext(diagram, options.threshold);
            if (options.json) {
                return json(toJson(ctx));
            }
            std::optional<PlacementSelection> selection;
            if (options.gate) {
                selection = PlacementSelection{*options.gate, parallelGates(diagram, *options.gate),
                                               suggestPlacements(diagram, *options.gate)};
            }
            return svg(renderPlacement(diagram, ctx, theme, selection));
        }
        case View::Suggest: {
            if (!options.gate) {
                throw InvalidInputError("suggest needs a gate");
            }
            const auto columns = suggestPlacements(diagram, *options.gate);
            const auto parallel = parallelGates(diagram, *options.gate);
            if (options.json) {
                return json(suggestionsToJson(*options.gate, columns, parallel));
            }
            return svg(renderPlacement(diagram, placementContext(diagram, options.threshold), theme,
                                       PlacementSelection{*options.gate, parallel, columns}));
        }
        case View::Connectivity: {
            const auto matrix = connectivity(model, options.node);
            return options.json ? json(toJson(matrix))
                                : svg(renderConnectivity(matrix, entanglementHistory(model), theme));
        }
        case View::Entanglement: {
            const auto history = entanglementHistory(model);
            return options.json ? json(toJson(history))
                                : svg(renderConnectivity(connectivity(model), history, theme));
        }
    }
    throw InvalidInputError("unknown view");
}

FoldState parseFoldList(const std::string &text, const SemanticTree &tree) {
    FoldState fold;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        const std::string item = text.substr(start, end - start);
        if (!item.empty()) {
            NodeId id = 0;
            const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
            if (ec != std::errc() || ptr != item.data() + item.size()) {
                throw InvalidInputError("invalid node id in unfold list: " + item);
            }
            fold.unfolded.insert(id);
        }
        start = end + 1;
    }
    fold.check(tree);
    return fold;
}

}  // namespace qcvine
