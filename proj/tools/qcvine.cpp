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

// qcvine command-line driver: compile | render | analyze | serve.

#include <CLI11.hpp>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qcvine/dsl.hpp"
#include "qcvine/errors.hpp"
#include "qcvine/service.hpp"
#include "qcvine/views.hpp"

namespace {

using namespace qcvine;

std::string readFile(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read " + path + ": " + std::strerror(errno));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void writeOutput(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Error("cannot write " + path);
    }
}

dsl::Params parseParams(const std::vector<std::string> &items) {
    dsl::Params params;
    for (const auto &item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw InvalidInputError("parameter must look like name=int: " + item);
        }
        const std::string value = item.substr(eq + 1);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
            throw InvalidInputError("parameter value is not an integer: " + item);
        }
        params[item.substr(0, eq)] = v;
    }
    return params;
}

bool endsWith(const std::string &s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// A `.qv` source is compiled on the fly; anything else is a model JSON file.
CircuitModel loadModel(const std::string &path, const std::vector<std::string> &params) {
    const std::string text = readFile(path);
    if (endsWith(path, ".qv")) {
        return dsl::compileProgram({text, parseParams(params)});
    }
    return modelFromJson(parseJson(text));
}

struct FoldFlags {
    std::optional<std::uint32_t> depth;
    std::string unfold;

    FoldState resolve(const SemanticTree &tree) const {
        if (!unfold.empty()) {
            return parseFoldList(unfold, tree);
        }
        return FoldState::toDepth(tree, depth.value_or(1));
    }
};

void addFoldFlags(CLI::App *cmd, FoldFlags &flags) {
    auto *depth = cmd->add_option("--fold-depth", flags.depth, "Unfold tree nodes up to this depth (root is 0)");
    auto *unfold = cmd->add_option("--unfold", flags.unfold, "Comma-separated tree node ids to unfold");
    depth->excludes(unfold);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qcvine: semantic quantum circuit diagrams"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::vector<std::string> params;

    auto *compile = app.add_subcommand("compile", "Compile a program into model JSON");
    bool fromJson = false;
    compile->add_option("file", input, "Program source (.qv) or flat gate list")->required();
    compile->add_option("--param", params, "Program parameter name=int (repeatable)");
    compile->add_flag("--from-json", fromJson, "Input is a flat gate-list JSON without tree data");
    compile->add_option("-o,--output", output, "Output file (default stdout)");

    auto *render = app.add_subcommand("render", "Render one view as SVG or JSON");
    FoldFlags renderFold;
    std::string viewName = "component";
    std::optional<std::int64_t> qubit;
    std::optional<std::int64_t> node;
    std::optional<std::int64_t> gate;
    std::uint32_t threshold = 1;
    bool asJson = false;
    render->add_option("model", input, "Model JSON or program source (.qv)")->required();
    render->add_option("--param", params, "Program parameter name=int when rendering a .qv file");
    render->add_option("--view", viewName,
                       "component|abstraction|provenance|placement|suggest|connectivity|entanglement|structure");
    addFoldFlags(render, renderFold);
    render->add_option("--qubit", qubit, "Qubit for the provenance view");
    render->add_option("--node", node, "Tree node scoping the connectivity view");
    render->add_option("--gate", gate, "Super gate for suggestions / placement highlight");
    render->add_option("--threshold", threshold, "Parallelism threshold")->check(CLI::PositiveNumber);
    render->add_flag("--json", asJson, "Emit the view's JSON payload instead of SVG");
    render->add_option("-o,--output", output, "Output file (default stdout)");

    auto *analyze = app.add_subcommand("analyze", "Emit all context analytics as one JSON document");
    FoldFlags analyzeFold;
    analyze->add_option("model", input, "Model JSON or program source (.qv)")->required();
    analyze->add_option("--param", params, "Program parameter name=int when analyzing a .qv file");
    addFoldFlags(analyze, analyzeFold);
    analyze->add_option("--qubit", qubit, "Include this qubit's provenance");
    analyze->add_option("--node", node, "Tree node scoping the connectivity matrix");
    analyze->add_option("--threshold", threshold, "Parallelism threshold")->check(CLI::PositiveNumber);
    analyze->add_option("-o,--output", output, "Output file (default stdout)");

    auto *serveCmd = app.add_subcommand("serve", "Run the local HTTP service");
    std::string host = "127.0.0.1";
    int port = 8080;
    serveCmd->add_option("program", input, "Program to preload (.qv)");
    serveCmd->add_option("--param", params, "Program parameter name=int");
    serveCmd->add_option("--host", host, "Bind address");
    serveCmd->add_option("--port", port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));

    CLI11_PARSE(app, argc, argv);

    try {
        if (compile->parsed()) {
            CircuitModel model;
            if (fromJson) {
                model = importFlat(parseJson(readFile(input)));
            } else {
                model = dsl::compileProgram({readFile(input), parseParams(params)});
            }
            writeOutput(output, dumpJson(toJson(model)));
            return 0;
        }
        if (render->parsed()) {
            const RenderTheme theme = themeFromEnvironment();
            const CircuitModel model = loadModel(input, params);
            ViewOptions options;
            options.view = parseView(viewName);
            options.json = asJson;
            options.threshold = threshold;
            if (qubit) {
                if (*qubit < 0 || *qubit >= model.qubitCount) {
                    throw NotFoundError("qubit index out of range: " + std::to_string(*qubit) + " (circuit has " +
                                        std::to_string(model.qubitCount) + " qubits)");
                }
                options.qubit = static_cast<QubitId>(*qubit);
            }
            if (node) {
                if (!model.semanticTree().contains(static_cast<NodeId>(*node)) || *node < 0) {
                    throw NotFoundError("unknown tree node: " + std::to_string(*node));
                }
                options.node = static_cast<NodeId>(*node);
            }
            if (gate) {
                if (*gate < 0) {
                    throw NotFoundError("unknown super gate: " + std::to_string(*gate));
                }
                options.gate = static_cast<SuperGateId>(*gate);
            }
            const auto diagram = segment(model, renderFold.resolve(model.semanticTree()));
            writeOutput(output, produceView(model, diagram, options, theme).body);
            return 0;
        }
        if (analyze->parsed()) {
            const CircuitModel model = loadModel(input, params);
            std::optional<NodeId> scope;
            if (node) {
                if (*node < 0 || !model.semanticTree().contains(static_cast<NodeId>(*node))) {
                    throw NotFoundError("unknown tree node: " + std::to_string(*node));
                }
                scope = static_cast<NodeId>(*node);
            }
            const auto diagram = segment(model, analyzeFold.resolve(model.semanticTree()));
            Json out;
            if (qubit) {
                if (*qubit < 0 || *qubit >= model.qubitCount) {
                    throw NotFoundError("qubit index out of range: " + std::to_string(*qubit));
                }
                out["provenance"] = toJson(provenance(diagram, static_cast<QubitId>(*qubit)));
            }
            out["placement"] = toJson(placementContext(diagram, threshold));
            out["connectivity"] = toJson(connectivity(model, scope));
            out["entanglement"] = toJson(entanglementHistory(model));
            writeOutput(output, dumpJson(out));
            return 0;
        }
        if (serveCmd->parsed()) {
            Service service(themeFromEnvironment());
            if (!input.empty()) {
                const std::string id = service.loadProgram({readFile(input), parseParams(params)});
                std::cout << "model " << id << '\n';
            }
            HttpServer server(service, host, port);
            std::cout << "listening on http://" << host << ':' << server.port() << std::endl;
            server.run();
            return 0;
        }
    } catch (const SourceError &e) {
        std::cerr << e.format(input) << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "qcvine: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
