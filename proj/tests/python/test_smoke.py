import pytest

import pzero


def test_group_orders():
    assert pzero.group_order("psl2", 8) == 504
    assert pzero.group_order("sz", 8) == 29120
    assert pzero.group_order("psu3", 8) == 5515776


def test_build_group_and_classify():
    g = pzero.build_group("psl2", 8)
    assert g["degree"] == 9
    assert g["metadata"]["expected_order"] == 504
    rep = pzero.classify(g["degree"], g["generators"])
    assert rep["kind"] == "linear_family"
    assert rep["family"] == "PSL"
    assert rep["n"] == 8


def test_su3_handle_has_no_permutations():
    h = pzero.build_group("su3", 4)
    assert h["order"] == 62400
    assert h["center_order"] == 1
    assert "generators" not in h


def test_classify_frobenius_group():
    rep = pzero.classify(3, [[1, 2, 0], [1, 0, 2]])
    assert rep["kind"] == "odd_times_2group"
    assert rep["s2_order"] == 2


def test_curves():
    info = pzero.curve_info("III", n=8)
    assert info["genus"] == 14
    assert info["automorphisms"]["order"] == 29120
    assert pzero.rational_points("II", 4, n=4)["total"] == 65
    assert pzero.curve_genus("IV", n=8) == 15904
    assert pzero.curve_two_rank("II", n=8) == 0
    aut = pzero.verify_automorphisms("II", n=4)
    assert aut["points_match"] and aut["order_match"]
    assert aut["group_order"] == 62400


def test_spectrum_and_quotients():
    r = pzero.spectrum("psu3", 4)
    assert [e["genus"] for e in r["entries"]] == [6, 456, 66, 456]
    assert r["entries"][0]["witness"] == "II"
    assert pzero.quotient_table(4)["all_consistent"]


def test_bounds_and_verify():
    b = pzero.bounds(order=62400, g=6)
    assert b["checks"]["trigger_gt_24g2"]
    res = pzero.verify("spectrum")
    assert res["pass"]
    assert len(res["criteria"]) == 3


def test_errors_translate():
    with pytest.raises(ValueError):
        pzero.group_order("nosuch", 8)
    with pytest.raises(RuntimeError):
        pzero.curve_genus("IV", n=3)
