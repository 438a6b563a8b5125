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

// View dispatch shared by the CLI and the HTTP service.

#pragma once

#include <optional>
#include <string>

#include "qcvine/render.hpp"

namespace qcvine {

enum class View : std::uint8_t {
    Structure,
    Component,
    Abstraction,
    Provenance,
    Placement,
    Suggest,
    Connectivity,
    Entanglement,
};

std::string_view toString(View view);
/// Throws InvalidInputError for unknown names.
View parseView(std::string_view name);

struct ViewOptions {
    View view = View::Component;
    std::optional<QubitId> qubit;         // provenance
    std::uint32_t threshold = 1;          // placement
    std::optional<SuperGateId> gate;      // suggest; optional selection for placement
    std::optional<NodeId> node;           // connectivity scope
    bool json = false;
};

struct ViewOutput {
    std::string contentType;
    std::string body;
};

/// Produces one view of `model` laid out as `diagram`. Missing required
/// options raise InvalidInputError; unknown qubits, gates and nodes raise
/// NotFoundError.
ViewOutput produceView(const CircuitModel &model, const ComponentDiagram &diagram, const ViewOptions &options,
                       const RenderTheme &theme);

/// Parses `--unfold` lists such as "1,4,7".
FoldState parseFoldList(const std::string &text, const SemanticTree &tree);

}  // namespace qcvine
