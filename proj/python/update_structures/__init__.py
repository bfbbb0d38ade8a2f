# Copyright 2026 The update-structures Authors
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

"""Law checking for update structures over finite sets and matrices."""

import json

from ._core import (
    NotFound,
    PremiseError,
    TypeMismatch,
    lens_report,
    pair_of_pants_report,
    spectrum_report,
)
from . import _core

__all__ = [
    "NotFound",
    "PremiseError",
    "TypeMismatch",
    "check",
    "check_all",
    "lens_report",
    "list_examples",
    "pair_of_pants_report",
    "spectrum_report",
]


def list_examples():
    return json.loads(_core.list_examples_json())


def check(name, tol=1e-9):
    """Runs the law suite on one registered example."""
    return json.loads(_core.check_example_json(name, tol))


def check_all(tol=1e-9):
    return json.loads(_core.check_all_json(tol))
