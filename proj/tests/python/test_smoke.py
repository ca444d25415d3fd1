import json

import pytest

import dgreen


def test_fake_degrees():
    assert dgreen.fake_degree(5, "2") == "q^3+q^2"
    assert dgreen.fake_degree(6, "r'") == "q^3"
    assert dgreen.poincare(3) == "q^3+2*q^2+2*q+1"


def test_irr():
    labels = [c["label"] for c in dgreen.irr(4)]
    assert labels == ["0", "1", "r", "r'", "eps"]


def test_omega_methods_agree():
    assert dgreen.omega(7, "sum")["entries"] == dgreen.omega(7, "closed")["entries"]
    assert dgreen.omega(3)["entries"]["0"]["0"] == "q^6"


def test_search_g2():
    res = dgreen.search(6, ["0", "1", "2", "r'", "eps"])
    assert len(res["correspondences"]) == 2
    assert {c["closure"]["diagram"] for c in res["correspondences"]} == {"right"}


def test_solve_round_trip():
    datum = {"m": 4, "classes": [["eps"], ["r'"], ["1", "r"], ["0"]], "a": [4, 2, 1, 0]}
    sys = dgreen.solve(datum)
    assert sys["Lambda"]["r'"]["r'"] == "q^4-1"
    assert dgreen.solve(json.dumps(sys)) == sys


def test_maximal_and_atlas():
    mx = dgreen.maximal(6, "0,1,2,r',eps")
    assert mx["f"] == [3, 2]
    assert "G2" in dgreen.atlas_names()
    assert dgreen.atlas("G2")["ok"] is True


def test_errors():
    with pytest.raises(dgreen.DgreenError):
        dgreen.irr(1)
    with pytest.raises(ValueError):
        dgreen.search(5, "0,1,bogus")


def test_run_matches_library():
    code, out, err = dgreen.run(["search", "6", "--springer", "0,1,2,r',eps"])
    assert code == 0
    assert json.loads(out) == dgreen.search(6, "0,1,2,r',eps")["correspondences"]
    assert dgreen.run([])[0] == 2
