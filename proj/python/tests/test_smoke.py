import math

import pytest

import rectlab


def catalan_power(k, n):
    return k * math.comb(2 * n + k, n) // (2 * n + k) if n else 1


def test_pinwheel():
    p = rectlab.pinwheel()
    assert len(p) == 5
    assert p.valid()
    assert p.contains(2) and not p.contains(1)
    assert p.is_simple_whirl()
    assert rectlab.signature(p) == [1, 1, 1, 1]


def test_drawing_roundtrip():
    d = rectlab.Drawing(2, 1, [(0, 0, 1, 1), (1, 0, 2, 1)])
    assert d.is_guillotine()
    assert [tuple(r) for r in d.rects] == [(0, 0, 1, 1), (1, 0, 2, 1)]
    assert rectlab.equivalent(d, rectlab.Drawing(3, 1, [(0, 0, 2, 1), (2, 0, 3, 1)]))


def test_counts():
    assert [rectlab.count(n, "1234") for n in range(1, 7)] == [1, 2, 6, 22, 90, 394]
    assert [rectlab.count(n, "1345678") for n in range(1, 7)] == [1, 2, 6, 20, 69, 242]
    assert len(rectlab.all_rectangulations(4)) == 24
    with pytest.raises(rectlab.ResourceLimit):
        rectlab.count(9, "1345678", "oracle")


def test_bijection():
    for p in rectlab.separable(5):
        assert rectlab.delta(rectlab.delta_inv(p)) == p


def test_series():
    assert rectlab.catalan(5) == [1, 1, 2, 5, 14, 42]
    assert rectlab.case_series(10, 6) == [0, 1, 2, 6, 20, 68, 232]
    assert rectlab.verify_theorem1(2, 20)
    v = rectlab.vortex_series(10)
    assert v["identity_ok"]
    assert v["V"][1:8] == [1, 2, 6, 20, 69, 242, 858]
    assert rectlab.vortex_recurrence(4) == ["1", "2", "6", "20", "69"]


def test_whirl_tree():
    sizes = rectlab.whirl_tree_sizes(6)
    assert sizes == [catalan_power(4, k) for k in range(7)]
    spec = rectlab.whirl_specialization(10)
    assert spec[5:] == [catalan_power(4, k) for k in range(6)]
    w = rectlab.build_simple_whirl([(4, 1)])
    assert len(w) == 6 and w.is_simple_whirl()
