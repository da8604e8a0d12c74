import json

import pytest

import tamari


def test_counts():
    assert [len(tamari.enumerate_interval_posets(n)) for n in range(1, 6)] == [1, 3, 13, 68, 399]
    exc = [sum(map(tamari.is_exceptional, tamari.enumerate_interval_posets(n))) for n in range(1, 5)]
    assert exc == [1, 3, 12, 55]


def test_round_trip():
    for i in tamari.enumerate_intervals(4):
        assert tamari.to_interval(tamari.from_interval(i)) == i


def test_rise_figure():
    top = tamari.IntervalPoset(3, inc=[(2, 3)], dec=[(2, 1)])
    bottom = tamari.rise(top)
    assert bottom == tamari.IntervalPoset(4, inc=[(3, 4)], dec=[(2, 1)])
    assert tamari.fall(bottom) == top
    i = tamari.to_interval(top)
    assert str(i.lower) == "((L (L L)) L)"
    assert str(i.upper) == "(L ((L L) L))"
    assert tamari.rise(tamari.IntervalPoset(3, inc=[(1, 2)], dec=[(3, 2)])) is None


def test_stat_and_classes():
    p = tamari.IntervalPoset(3, inc=[(2, 3)], dec=[(2, 1)])
    assert tamari.stat(p) == (2, 2)
    assert tamari.is_modern(p)
    assert not tamari.is_exceptional(p)
    assert tamari.is_infinitely_modern(p)


def test_json_and_errors():
    p = tamari.IntervalPoset.from_json('{"size":3,"inc":[[2,3]],"dec":[[2,1]]}')
    assert json.loads(p.to_json()) == {"size": 3, "inc": [[2, 3]], "dec": [[2, 1]]}
    with pytest.raises(tamari.PreconditionError):
        tamari.poset_to_nct(p)
    with pytest.raises(ValueError):
        tamari.BinaryTree("(L L")


def test_census_and_triangle():
    row = tamari.census(5)
    assert row["intervals"]["count"] == 399
    assert all(e["match"] for e in row.values())
    rows, agree = tamari.triangle_b(4)
    assert agree
    assert sum(map(sum, rows)) == 55


def test_verify_small():
    assert all(ok for _, ok, _ in tamari.verify(3))
