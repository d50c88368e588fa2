from pathlib import Path

import pytest

import nilcent


def test_root_data():
    assert nilcent.num_positive_roots("E6") == 36
    assert nilcent.num_positive_roots("G2") == 6
    # entry (i, j) is alpha_i(h_j); alpha_1 is long in B2
    assert nilcent.cartan_matrix("B2") == [[2, -2], [-1, 2]]
    assert nilcent.canonical_type_label("A2+A1") == "A1+A2"


def test_g2_subregular():
    rec = nilcent.component_group("G2", "G2(a1)")
    assert rec["status"] == "OK"
    assert rec["route"] == "conjugacy"
    assert rec["group"]["label"] == "S3"
    assert rec["group"]["order"] == 6


def test_classical_example_file():
    path = Path(nilcent.data_dir()) / "classical" / "B2-example.json"
    rec = nilcent.component_group("B2", representative=path)
    assert rec["route"] == "classical"
    assert rec["orbit"] == "[3,1,1]"
    assert rec["group"]["label"] == "C2"
    assert rec["hat_group"]["label"] == "C2×C2"


def test_records_are_deterministic():
    a = nilcent.component_group("F4", "B2")
    b = nilcent.component_group("F4", "B2")
    assert a == b
    assert "seconds" not in a
    assert "seconds" in nilcent.component_group("F4", "B2", timing=True)


def test_budget_gives_inconclusive():
    rec = nilcent.component_group("E6", "D4(a1)", budget=5)
    assert rec["status"] == "INCONCLUSIVE"


def test_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        nilcent.component_group("F4", "X7")
    with pytest.raises(ValueError):
        nilcent.component_group("F4", "A2", route="classical")
    with pytest.raises(ValueError):
        nilcent.component_group("F4")


def test_tables_match_reference():
    rows = nilcent.table("G2")
    assert [r["orbit"] for r in rows] == ["G2(a1)"]
    assert nilcent.diff_reference("G2") == []
    assert len(nilcent.orbit_labels("C2")) == 4


def test_verify_properties_suite():
    report, code = nilcent.verify(["properties"])
    assert code == 0
    assert "classical" in nilcent.suite_names()
    with pytest.raises(ValueError):
        nilcent.verify(["nonexistent"])
