"""Smoke tests for the compiled python module.

Run with the build directory (containing _hsc*.so) on PYTHONPATH; ctest sets
this up automatically.
"""

import pytest

import _hsc as hsc


def test_zoo_roundtrip_and_check():
    names = hsc.zoo_names()
    assert "kc2" in names and "h4_regular" in names
    for name in names:
        text = hsc.zoo_document(name)
        assert hsc.canonicalize(text) == text
        for record, entries in hsc.check(text).items():
            assert all(e["pass"] for e in entries), (name, record, entries)


def test_antipode():
    kc2 = hsc.zoo_document("kc2")
    assert hsc.antipode(kc2, "kc2") == [(0, 0, "1"), (1, 1, "1")]
    m2 = hsc.zoo_document("m2")
    assert hsc.antipode(m2, "m2") is None


def test_parse_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        hsc.canonicalize("not a document")
    with pytest.raises(ValueError):
        hsc.canonicalize(
            "hsc v1 begin r kind: coalgebra field: F4 dim: 0 comul: [] counit: [] end"
        )


def test_lax_axioms_and_coinvariants():
    doc = hsc.zoo_document("kc2_induced_regular")
    entries = hsc.lax_axioms(doc, "kc2_induced_regular")
    assert entries and all(e["pass"] for e in entries)
    assert hsc.coinvariants_dim(doc, "kc2_induced_regular") == 2


def test_cosmash_emits_a_checkable_document():
    doc = hsc.zoo_document("kc2_regular")
    out = hsc.cosmash_document(doc, "C")
    reports = hsc.check(out)
    assert set(reports) == {"C_dual", "C_cosmash"}
    assert all(e["pass"] for entries in reports.values() for e in entries)


def test_tau_on_a_stored_inclusion():
    doc = hsc.zoo_document("kc2")
    doc += (
        "\nbegin reg\nkind: comodule_r\nfield: Q\ndim: 2\nover: kc2\n"
        'coaction_r: [(0, 0, 0, "1"), (1, 1, 1, "1")]\nend\n'
        "\nbegin sub\nkind: xi_block\nfield: Q\nrows: 2\ncols: 1\nover: kc2\n"
        'xi_HC: [(1, 0, "1")]\nend\n'
    )
    result = hsc.tau(doc, "sub", "reg")
    assert result["dim"] == 1
    assert result["steps"] == 0
    assert result["inclusion"] == [(1, 0, "1")]


def test_morita_is_seeded_and_verified():
    doc = hsc.zoo_document("kc2_regular")
    first = hsc.morita(doc, "kc2_regular", "kc2_regular", seed=20260823)
    second = hsc.morita(doc, "kc2_regular", "kc2_regular", seed=20260823)
    assert first["verified"]
    assert first == second
