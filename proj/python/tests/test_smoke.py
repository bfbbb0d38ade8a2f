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

import math

import numpy as np
import pytest

import update_structures as us


def test_registry_listing():
    names = {e["name"] for e in us.list_examples()}
    assert {"qubit_z_pvs", "security_db", "quantum_db_causal"} <= names
    assert len(names) >= 12


def test_check_security_db():
    rep = us.check("security_db")
    assert rep["ok"]
    assert rep["classification"] == "weak_only"
    laws = {l["name"]: l for l in rep["laws"]}
    assert laws["GetPut"]["residual"] == 3
    assert list(rep)[:2] == ["example", "backend"]


def test_unknown_example():
    with pytest.raises(KeyError):
        us.check("missing")


def test_spectrum_report_qubit():
    p0 = np.diag([1, 0]).astype(complex)
    p1 = np.diag([0, 1]).astype(complex)
    rep = us.spectrum_report([p0, p1])
    assert rep["is_pvs"]
    assert rep["spectrum"]["classification"] == "strong"
    m = rep["measurement"]
    assert m["classification"] == "weak_only"
    holds, residual = m["laws"]["GetPut"]
    assert not holds
    assert math.isclose(residual, math.sqrt(2), abs_tol=1e-9)
    # Pi = sum_i P_i (x) |i>
    pi = np.kron(p0, np.array([[1], [0]])) + np.kron(p1, np.array([[0], [1]]))
    assert np.allclose(rep["spectrum_matrix"], pi)


def test_spectrum_report_rejects_non_projectors():
    with pytest.raises(ValueError):
        us.spectrum_report([0.5 * np.eye(2, dtype=complex), 0.5 * np.eye(2, dtype=complex)])


def test_pair_of_pants():
    rep = us.pair_of_pants_report(2)
    assert rep["classification"] == "strong"
    assert not rep["laws"]["CommutativePut"][0]


def test_lens_report():
    # identity lens on a two-element set
    rep = us.lens_report(2, 2, [0, 1], [0, 1, 0, 1])
    assert rep["put_put"] and rep["put_get"] and rep["get_put"]
    assert rep["classification"] == "strong"
