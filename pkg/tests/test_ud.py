import random

import pytest
from hypothesis import given, settings, strategies as st

from affcrystal import perfect as P
from affcrystal import ud
from affcrystal.cartan import cartan_matrix
from affcrystal.geometric import UnsupportedRank


def ints(n):
    return st.tuples(*[st.integers(-50, 50) for _ in ud.coords(n)])


def named(n, x):
    return dict(zip(ud.coords(n), x))


def test_n2_examples():
    # coordinates are (x22, x11, x21)
    assert ud.ud_e(2, 1, 3, (4, 5, 6)) == (4, 8, 6)
    assert ud.ud_e(2, 2, 1, (0, 0, 0)) == (1, 0, 0)
    assert ud.ud_kashiwara(2, 0, "f", (0, 0, 0)) == (1, 1, 0)
    assert ud.ud_wt(2, 0, (3, 7, -2)) == -14


def test_n3_e2_moves_only_x22_in_its_region():
    rng = random.Random(2)
    seen = 0
    while seen < 50:
        x = ud.random_x(3, rng)
        v = named(3, x)
        if v["x21"] + v["x22"] >= v["x11"] + v["x32"]:
            seen += 1
            y = named(3, ud.ud_kashiwara(3, 2, "e", x))
            assert y == {**v, "x22": v["x22"] + 1}


def test_eps_at_zero():
    assert ud.ud_eps(3, 3, (0,) * 6) == 0
    assert ud.ud_eps(4, 0, (0,) * 10) == 0


def test_omega_examples():
    assert ud.omega(2, (0, 0, 0)) == P.zero(2)
    assert ud.omega(2, (1, 1, 0)).as_dict() == {"11": 1, "12": 0, "13": -1, "22": 0, "23": 1, "24": -1}
    b = ud.omega(4, ud.random_x(4, random.Random(0)))
    assert named(4, ud.omega_inv(4, b))["x44"] == -b[1, 5]
    with pytest.raises(P.InvalidElement):
        ud.omega_inv(2, (1, 0, 0, 0, 0, 0))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_omega_is_a_linear_bijection(n):
    assert ud.omega_identities(n) == {"inverse_left": True, "inverse_right": True, "structural": True}


@pytest.mark.parametrize("n", [2, 3, 4])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_ud_laws(n, data):
    x = data.draw(ints(n))
    c1, c2 = data.draw(st.integers(-5, 5)), data.draw(st.integers(-5, 5))
    a = cartan_matrix("Cn1", n).matrix
    assert ud.omega_inv(n, ud.omega(n, x)) == x
    for i in range(n + 1):
        assert ud.ud_e(n, i, 0, x) == x
        y = ud.ud_e(n, i, c1, x)
        assert ud.ud_e(n, i, c2, y) == ud.ud_e(n, i, c1 + c2, x)
        assert ud.ud_eps(n, i, y) == ud.ud_eps(n, i, x) - c1
        for j in range(n + 1):
            assert ud.ud_wt(n, j, y) == ud.ud_wt(n, j, x) + c1 * a[i][j]
        assert ud.ud_kashiwara(n, i, "e", ud.ud_kashiwara(n, i, "f", x)) == x


@pytest.mark.parametrize("n", [2, 3, 4])
def test_verify_iso_small(n):
    r = ud.verify_iso(n, samples=300, seed=11)
    assert r["violations"] == 0 and r["checks"] == 300 * (n + 1) * 5


@pytest.mark.parametrize("n", [2, 3, 4])
def test_corrected_tables_agree_with_restriction(n):
    assert ud.table_agreement(n, samples=400, seed=3)["violations"] == 0
    r = ud.transport(n, samples=400, seed=3, printed=False)
    assert r["violations"] == 0
    assert all(row["no_row"] == 0 for row in r["rows"])


def test_printed_tables_are_diagnosed():
    # the uncorrected displays disagree with the restriction somewhere
    assert ud.table_agreement(4, samples=400, seed=3, printed=True)["violations"] > 0
    assert ud.transport(4, samples=400, seed=3, printed=True)["violations"] > 0


def test_cross_check_small_ranks_clean():
    for n in (2, 3):
        assert ud.cross_check(n, samples=500, seed=5)["violations"] == 0


def test_stratified_points_reach_every_region():
    pts = ud.stratified_points(20, random.Random(1))
    hits = {r: 0 for r in ud.E0_REGIONS}
    for p in pts:
        hits[ud.e0_region(p)] += 1
    assert min(hits.values()) >= 20


def test_verify_iso_reports_witnesses(monkeypatch):
    real = ud.ud_eps
    monkeypatch.setattr(ud, "ud_eps", lambda n, i, x: real(n, i, x) + (i == 1))
    r = ud.verify_iso(2, samples=5, seed=0, max_witnesses=3)
    assert r["violations"] >= 5 and len(r["witnesses"]) == 3


def test_bad_inputs():
    with pytest.raises(UnsupportedRank):
        ud.ud_e(5, 0, 1, (0,) * 15)
    with pytest.raises(ValueError):
        ud.ud_kashiwara(2, 0, "g", (0, 0, 0))
