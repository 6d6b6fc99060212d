"""Smoke tests for the _todanets extension module."""

import json

import pytest

td = pytest.importorskip("_todanets")


def test_hamiltonian_methods_agree():
    base = td.hamiltonian(2, 1, method="matrix")
    for method in ("paths", "cc", "network"):
        assert td.hamiltonian(2, 1, method=method) == base


def test_n1_hamiltonian_string():
    assert td.hamiltonian(1, 1) == "x1*x2^-1 + x1^-1*x2 + x1^-1*x2^-1"


def test_hamiltonian_json_roundtrip():
    doc = json.loads(td.hamiltonian_json(1, 1))
    assert doc["vars"] == ["x1", "x2"]
    assert len(doc["terms"]) == 3


def test_submodule_counts():
    assert td.submodule_count(5, 3) == 63
    dims = td.submodule_dimension_vectors(5, 3)
    assert len(dims) == 63
    assert all(len(d) == 10 for d in dims)


def test_mutation_involutive():
    assert td.mutate(2, [1, 1]) == td.mutate(2, [])


def test_bps_quiver_matches_mutation_class():
    assert td.bps_quiver(3) == td.mutate(2, [])


def test_trace_circle():
    out = td.trace(2, -1.5707963267948966, 1.0 + 0.0j, step=0.01, t_max=3.0)
    assert out["monotonicity"] == "constant"
    assert len(out["t"]) == len(out["z"]) == len(out["branch"])


def test_bad_arguments():
    with pytest.raises(ValueError):
        td.hamiltonian(2, 5)
