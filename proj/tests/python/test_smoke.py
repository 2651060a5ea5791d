import os

import pytest

import hgkit


def test_classify_degree_six():
    rows = hgkit.classify(6)
    assert len(rows) == 16
    by_name = {(r["name"], r["order"]): r["verdict"] for r in rows}
    assert by_name[("C6", 6)] == "Galois"
    assert by_name[("F_{18}:2", 36)] == "almost classically Galois"
    assert by_name[("S6", 720)] == "not Hopf Galois"


def test_count_klein_four():
    report = hgkit.count(4, ["(1,2)(3,4)", "(1,3)(2,4)"])
    assert report["total"] == 4
    assert report["per_type"] == {"C4": 3, "V4": 1}


def test_check_sextic_s4():
    cat = {e["name"]: e for e in hgkit.transitive_catalog(6)}
    entry = cat["S4(6c)"]
    verdict = hgkit.check(6, entry["generators"], ["(2,5,4,3)"])
    assert verdict["hopf_galois"] is False
    assert verdict["decided_by"] == "order-precheck"


def test_holomorph_of_c6():
    info = hgkit.holomorph_info(6, ["(1,2,3,4,5,6)"])
    assert info["hol_order"] == 12
    assert info["hol_name"] == "D_{2·6}"


def test_parse_error():
    with pytest.raises(hgkit.ParseError):
        hgkit.check(4, ["(1,9)"])


def test_descent_summary():
    data_dir = os.environ.get("HGKIT_DATA_DIR")
    if not data_dir:
        pytest.skip("HGKIT_DATA_DIR not set")
    summary = hgkit.descent_summary(
        os.path.join(data_dir, "fields", "biquadratic.json"),
        4,
        ["(1,2)(3,4)", "(1,3)(2,4)"],
    )
    assert summary["structures"] == 4
    assert summary["dimension"] == 4
    assert summary["isomorphism"] is True
