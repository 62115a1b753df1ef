import pytest

import dimerlab


def test_fan_and_enumeration():
    t = dimerlab.fan_triangulation(5)
    assert t.n == 5
    assert t.diagonals == [(1, 3), (1, 4)]
    assert len(dimerlab.enumerate_triangulations(6)) == 14
    assert dimerlab.parse_triangulation(5, "1-3,1-4") == t


def test_flip_roundtrip():
    t = dimerlab.fan_triangulation(5)
    t2, move = dimerlab.flip(t, (1, 3))
    assert move["inserted"] == (2, 4)
    assert dimerlab.flip(t2, (2, 4))[0] == t
    assert len(dimerlab.flip_sequence(t, t2)) == 1


def test_quiver_counts():
    q = dimerlab.quiver(dimerlab.fan_triangulation(3), 2)
    assert len(q["vertices"]) == 6
    assert len(q["arrows"]) == 9
    assert len(q["faces"]) == 4
    assert dimerlab.p2(7, 2) == 13


def test_verify_and_gamma():
    r = dimerlab.verify(dimerlab.fan_triangulation(5), 2)
    assert r["status"] == 0
    g = dimerlab.gamma(3, 4)
    assert len(g["arrows"]) == 3 * 4 * 2


def test_starved_budget_is_inconclusive():
    r = dimerlab.verify(dimerlab.fan_triangulation(5), 2, budget_visited=1)
    assert r["status"] == 2


def test_sweep_and_flip_check():
    s = dimerlab.sweep([2], max_n=6, workers=2)
    assert len(s["rows"]) == 22
    assert s["status"] == 0
    c = dimerlab.flip_check(dimerlab.fan_triangulation(5), (1, 3), 2)
    assert c["passed"]


def test_errors():
    with pytest.raises(dimerlab.DimerlabError):
        dimerlab.Triangulation(5, [(1, 2), (1, 3)])
    with pytest.raises(ValueError):
        dimerlab.parse_triangulation(5, "1-3,x")
