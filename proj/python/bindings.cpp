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

// Thin binding layer: payloads cross the boundary as JSON/SVG text and the
// Python package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcvine/dsl.hpp"
#include "qcvine/errors.hpp"
#include "qcvine/views.hpp"

namespace py = pybind11;
using namespace qcvine;

namespace {

class Model {
   public:
    explicit Model(CircuitModel model) : model_(std::make_shared<const CircuitModel>(std::move(model))) {}

    static Model compile(const std::string &source, const dsl::Params &params) {
        return Model(dsl::compileProgram({source, params}));
    }

    static Model fromJson(const std::string &text) { return Model(modelFromJson(parseJson(text))); }

    static Model fromFlatJson(const std::string &text) { return Model(importFlat(parseJson(text))); }

    std::string toJsonText() const { return dumpJson(toJson(*model_)); }

    std::uint32_t qubitCount() const { return model_->qubitCount; }
    std::size_t gateCount() const { return model_->gates.size(); }

    std::string view(const std::string &name, std::optional<std::uint32_t> foldDepth,
                     std::optional<std::vector<NodeId>> unfold, bool json, std::optional<QubitId> qubit,
                     std::uint32_t threshold, std::optional<SuperGateId> gate, std::optional<NodeId> node) const {
        const SemanticTree &tree = model_->semanticTree();
        FoldState fold;
        if (unfold) {
            fold.unfolded.insert(unfold->begin(), unfold->end());
            fold.check(tree);
        } else {
            fold = FoldState::toDepth(tree, foldDepth.value_or(1));
        }
        ViewOptions options;
        options.view = parseView(name);
        options.json = json;
        options.qubit = qubit;
        options.threshold = threshold;
        options.gate = gate;
        options.node = node;
        return produceView(*model_, segment(*model_, fold), options, themeFromEnvironment()).body;
    }

   private:
    std::shared_ptr<const CircuitModel> model_;
};

}  // namespace

PYBIND11_MODULE(_qcvine, m) {
    m.doc() = "qcvine engine bindings";

    static py::exception<Error> error(m, "Error");
    static py::exception<SourceError> sourceError(m, "SourceError", error.ptr());
    static py::exception<NotFoundError> notFound(m, "NotFoundError", error.ptr());
    static py::exception<InvalidInputError> invalidInput(m, "InvalidInputError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const SourceError &e) {
            py::set_error(sourceError, e.format("<source>").c_str());
        } catch (const NotFoundError &e) {
            py::set_error(notFound, e.what());
        } catch (const InvalidInputError &e) {
            py::set_error(invalidInput, e.what());
        } catch (const Error &e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<Model>(m, "Model")
        .def_static("compile", &Model::compile, py::arg("source"), py::arg("params") = dsl::Params{})
        .def_static("from_json", &Model::fromJson, py::arg("text"))
        .def_static("from_flat_json", &Model::fromFlatJson, py::arg("text"))
        .def("to_json", &Model::toJsonText)
        .def_property_readonly("qubit_count", &Model::qubitCount)
        .def_property_readonly("gate_count", &Model::gateCount)
        .def("view", &Model::view, py::arg("name"), py::kw_only(), py::arg("fold_depth") = py::none(),
             py::arg("unfold") = py::none(), py::arg("json") = true, py::arg("qubit") = py::none(),
             py::arg("threshold") = 1, py::arg("gate") = py::none(), py::arg("node") = py::none());
}
