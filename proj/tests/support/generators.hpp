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

// Seeded random DSL programs for property tests.

#pragma once

#include <random>
#include <string>

#include "qcvine/dsl.hpp"
#include "qcvine/segmentation.hpp"

namespace qcvine::testing {

struct GenConfig {
    std::uint32_t maxQubits = 12;
    std::size_t minGates = 1;
    std::size_t maxGates = 50;
    /// Upper bound on statements in the circuit body.
    int topStatements = 4;
    /// Bias towards loops with 4..7 iterations of uniform bodies so that the
    /// abstraction has something to hide.
    bool repetitions = false;
};

struct Generated {
    std::string source;
    CircuitModel model;
};

/// Draws programs until one compiles within the configured limits.
Generated randomProgram(std::mt19937_64 &rng, const GenConfig &config = {});

/// Random subset of tree nodes unfolded (the root is implicit).
FoldState randomFold(std::mt19937_64 &rng, const SemanticTree &tree);

/// Flat circuit with random gates, no tree structure beyond the root.
CircuitModel randomFlatCircuit(std::mt19937_64 &rng, std::uint32_t maxQubits, std::size_t maxGates);

/// Reads a fixture from the source tree's fixtures/ directory.
std::string readFixture(const std::string &name);

}  // namespace qcvine::testing
