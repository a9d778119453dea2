# Copyright 2026 The symlife Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Maximum-lifetime routing for symmetric sensor networks.

Networks and generator specs are plain dicts in the same layout as the JSON
files read by the ``symlife`` command-line tool.
"""

import json

from symlife import _core

SymlifeError = _core.SymlifeError

__all__ = ["SymlifeError", "detect", "solve", "verify", "generate", "sweep", "run_cli"]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def detect(network):
    """Symmetry group, orbit table and stabilizer orders."""
    return json.loads(_core.detect(_text(network)))


def solve(network, e0=None, canonicalize=False):
    """Optimal routing; ``flow`` holds 1-based (i, j, q) triplets."""
    return json.loads(_core.solve(_text(network), e0, canonicalize))


def verify(network, tol=1e-6, rotation_only=False):
    """Full solve versus reduced solve with the structural audits."""
    return json.loads(_core.verify(_text(network), tol, rotation_only))


def generate(spec, seed=None):
    return json.loads(_core.generate(_text(spec), seed))


def sweep(config, base_dir=".", tol=1e-6, jobs=1):
    """Returns (rows_csv, fold_csv, failures)."""
    return _core.sweep(_text(config), str(base_dir), tol, jobs)


def run_cli(args):
    """Runs the command-line front end in-process: (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
