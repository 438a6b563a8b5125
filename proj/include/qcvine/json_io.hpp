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

// JSON payloads for every view. Keys are emitted in a fixed order so that
// identical inputs serialize to identical bytes.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qcvine/abstraction.hpp"
#include "qcvine/analytics.hpp"
#include "qcvine/segmentation.hpp"

namespace qcvine {

using Json = nlohmann::ordered_json;

Json toJson(const SemanticTree &tree);
Json toJson(const CircuitModel &model);
Json toJson(const ComponentDiagram &diagram);
Json toJson(const AbstractionDiagram &diagram);
Json toJson(const ProvenanceTimeline &timeline);
Json toJson(const PlacementContext &context);
Json toJson(const ConnectivityMatrix &matrix);
Json toJson(const EntanglementHistory &history);
Json suggestionsToJson(SuperGateId gate, const std::vector<std::uint32_t> &columns,
                       const std::vector<SuperGateId> &parallel);

/// Inverse of toJson(CircuitModel). Throws InvalidInputError on malformed or
/// structurally invalid input.
CircuitModel modelFromJson(const Json &json);
SemanticTree treeFromJson(const Json &json);

/// Flat gate list `{"qubits": N, "gates": [{"kind", "operands", "params"}]}`
/// without tree data. Operands are qubit indices or `{"q", "role"}` objects.
/// All gates are attached to a single root node; timestamps follow list order.
CircuitModel importFlat(const Json &json);

/// Parses text, mapping parse failures to InvalidInputError.
Json parseJson(const std::string &text);

/// Canonical text form: two-space indent plus trailing newline.
std::string dumpJson(const Json &json);

}  // namespace qcvine
