# Copyright 2026 The qcvine Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Semantic-aware quantum circuit diagrams.

    >>> import qcvine
    >>> m = qcvine.compile("circuit bell(2) { h q[0]; cx q[0], q[1]; }")
    >>> m.component()["width"]
    2
"""

import json as _json

from ._qcvine import Error, InvalidInputError, NotFoundError, SourceError
from ._qcvine import Model as _Model

__all__ = [
    "Circuit",
    "Error",
    "InvalidInputError",
    "NotFoundError",
    "SourceError",
    "compile",
    "load",
]


class Circuit:
    """A compiled circuit model with view accessors.

    Fold state is given per call as ``fold_depth`` (root is depth 0) or an
    explicit ``unfold`` list of tree node ids; the default shows the top-level
    components.
    """

    def __init__(self, model):
        self._model = model

    @property
    def qubit_count(self):
        return self._model.qubit_count

    @property
    def gate_count(self):
        return self._model.gate_count

    def to_json(self):
        return _json.loads(self._model.to_json())

    def _view(self, name, **kwargs):
        return _json.loads(self._model.view(name, json=True, **kwargs))

    def structure(self):
        return self._view("structure")

    def component(self, **fold):
        return self._view("component", **fold)

    def abstraction(self, **fold):
        return self._view("abstraction", **fold)

    def provenance(self, qubit, **fold):
        return self._view("provenance", qubit=qubit, **fold)

    def placement(self, threshold=1, **fold):
        return self._view("placement", threshold=threshold, **fold)

    def suggest(self, gate, **fold):
        return self._view("suggest", gate=gate, **fold)

    def connectivity(self, node=None):
        return self._view("connectivity", node=node)

    def entanglement(self):
        return self._view("entanglement")

    def svg(self, view="component", **kwargs):
        """SVG text for any view except ``structure``."""
        return self._model.view(view, json=False, **kwargs)


def compile(source, **params):
    """Compiles DSL source; keyword arguments bind integer parameters."""
    return Circuit(_Model.compile(source, params))


def load(text):
    """Loads a model JSON document, or a flat gate list without tree data."""
    doc = _json.loads(text)
    if "tree" in doc:
        return Circuit(_Model.from_json(text))
    return Circuit(_Model.from_flat_json(text))
