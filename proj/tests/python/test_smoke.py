import json

import pytest

import cubicmcm as cm


def test_lattice():
    assert cm.euler_form((1, 0), (0, 1)) == 1
    assert cm.sigma_power(2, (0, 1)) == (1, 1)
    assert cm.reduce3((1, 3)) == (2, (1, 0))
    assert cm.reduce6((-1, 0)) == (3, (1, 0))
    assert cm.orbit_V(2) == ((2, 3), 2)


def test_betti():
    assert cm.betti_table(2, 0, "atiyah") == {(0, 0): 1, (0, 1): 6, (1, 2): 6, (1, 3): 1}
    assert cm.betti_table(3, 5) == {(0, 0): 5, (1, 1): 1, (1, 2): 4}
    g = cm.betti_general(0, 1)
    assert g["representative"] == "G(1,1)"
    assert g["internal_shift"] == 2
    assert cm.betti_at(1, 0, 3, 5, "atiyah") == 3


def test_invariants():
    h = cm.hilbert(4, 6, "special")
    assert h["P"] == (0, [6, 6])
    assert (h["e"], h["mu"], h["rank"]) == (12, 7, 4)
    assert cm.hilbert_coefficients(2, 1, 2) == [1, 7, 13]
    assert cm.syzygy(1, 0, "atiyah") == ("S_1", (2, 3), "special", 2)
    assert cm.is_ulrich(1, 0)
    assert not cm.is_ulrich(2, 3, "special")


def test_errors():
    with pytest.raises(cm.CubicMcmError, match="ZeroCharge"):
        cm.reduce3((0, 0))
    with pytest.raises(ValueError):
        cm.betti_table(1, 3)


def test_matrix_factorizations():
    doc = cm.mf_build("koszul", psi="2")
    assert json.loads(doc)["grading"] == {"rows": [0, 0, 0, 1], "cols": [1, 2, 2, 2]}
    assert cm.mf_verify(doc)["ok"]
    assert cm.mf_betti(doc, "B") == cm.betti_table(1, 0, "atiyah")
    moore = cm.mf_build("moore", psi="2", point=["1", "2", "3"])
    assert cm.mf_betti(moore, "A") == {(0, 0): 3, (1, 1): 3}
    sky = cm.mf_build("skyscraper", field="fp:11", psi="3", explicit=True)
    assert cm.mf_verify(sky)["ok"]
    with pytest.raises(cm.CubicMcmError, match="NotOnCurve"):
        cm.mf_build("moore", field="fp:7", psi="3")


def test_points_and_cli():
    pts = cm.points("fp:7", "3")
    assert len(pts) == 9
    assert cm.points("fp:7", "3", nonzero=True) == []
    code, out, _ = cm.run_cli(["reduce", "0", "1"])
    assert code == 0 and "k=2, charge (1,1)" in out
    code, out, _ = cm.run_cli(["mf", "verify", "-"], stdin=cm.mf_build("koszul"))
    assert code == 0 and "result: ok" in out
    assert cm.run_cli(["betti", "1"])[0] == 2
