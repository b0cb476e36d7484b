import math

import pytest

from doublebase.critical import (
    Case,
    curve_csv,
    generalized_golden_ratio,
    kl_fixed_point,
    komornik_loreti,
    ks_crosscheck,
    parse_curve_csv,
    sample_curve,
)
from doublebase.substitution import node_boundaries

PHI = (1 + 5 ** 0.5) / 2


def test_golden_ratio_examples():
    r = generalized_golden_ratio(1.55)
    assert abs(r.value.mid - 1 / 0.55) < 1e-10
    assert r.case is Case.LEFT_FORMULA and r.node == ""
    r = generalized_golden_ratio(1.75)
    assert abs(r.value.mid - 2.75 / 1.75) < 1e-10
    assert r.case is Case.RIGHT_FORMULA and r.node == ""
    r = generalized_golden_ratio(PHI)
    assert abs(r.value.mid - PHI) < 1e-9


def test_komornik_loreti_examples():
    r = komornik_loreti(1.5)
    assert abs(r.value.mid - 2.0) < 1e-9
    assert r.case is Case.LEFT_FORMULA and r.node == ""
    r = komornik_loreti(1.9)
    assert abs(r.value.mid - 2.8 / 1.71) < 1e-10
    assert r.case is Case.RIGHT_FORMULA and r.node == ""
    # the closed form on the left interval, evaluated at the golden ratio
    r = komornik_loreti(PHI)
    expected = (PHI + 2 + math.sqrt(PHI * PHI + 4)) / (2 * PHI)
    assert abs(r.value.mid - expected) < 1e-10


def test_interval_memberships_deeper_node():
    # q0 = 1.7 lies strictly between the level-zero K intervals: one M step
    r = komornik_loreti(1.7)
    assert r.node == "ML"
    assert r.case is Case.LEFT_FORMULA
    # boundary word is the node's sigma(1 0^inf)
    assert r.boundary_word == node_boundaries("ML").s10


def test_result_invariants():
    for q0 in [1.2, 1.5, 1.618, 1.75, 1.9, 2.5]:
        for fn in (generalized_golden_ratio, komornik_loreti):
            r = fn(q0)
            assert r.value.lo > 1.0
            assert r.value.hi < q0 / (q0 - 1) + 1e-6
            assert r.value.lo <= r.value.hi
            assert abs(r.inequality_witness - (q0 - 1) * (r.value.mid - 1)) < 1e-12


def test_kl_fixed_point():
    br = kl_fixed_point(tol=1e-10)
    assert abs(br.mid - 1.787231650) < 5e-9
    r = komornik_loreti(br.mid)
    assert abs(r.value.mid - br.mid) < 1e-8


def test_ks_crosscheck_examples():
    assert ks_crosscheck(1.9, 1.70).order == ">"
    assert ks_crosscheck(1.9, 1.55).order == "<"
    assert ks_crosscheck(2.0, 1.5).order == "="


def test_ks_crosscheck_brackets_K(monkeypatch):
    for q0 in [1.6, 1.75, 1.9]:
        k = komornik_loreti(q0).value.mid
        assert ks_crosscheck(q0, k + 1e-3).order == ">"
        assert ks_crosscheck(q0, k - 1e-3).order == "<"


def test_node_consistency_with_ks():
    # the K node is a prefix of the joint descent walk at q1 = mid(K)
    for q0 in [1.7, 1.75, 1.82]:
        r = komornik_loreti(q0)
        ks = ks_crosscheck(q0, r.value.mid, depth=16)
        assert ks.node.startswith(r.node)


def test_sample_curve_values_and_monotonicity():
    rows = sample_curve(1.5, 2.0, 3, "gr")
    mids = [(r.value_lo + r.value_hi) / 2 for r in rows]
    assert abs(mids[0] - 2.0) < 1e-9
    assert abs(mids[1] - 11 / 7) < 1e-9
    assert abs(mids[2] - 1.5) < 1e-9
    rows = sample_curve(1.5, 2.0, 3, "kl")
    mids = [(r.value_lo + r.value_hi) / 2 for r in rows]
    assert abs(mids[0] - 2.0) < 1e-9
    assert abs(mids[2] - 1.5) < 1e-9
    g175 = 2.75 / 1.75
    assert g175 < mids[1] < 1.75 / 0.75  # between G(q0) and q0/(q0-1)
    # two-point sampling is strictly decreasing for both maps
    for what in ("gr", "kl"):
        rows = sample_curve(1.4, 2.2, 2, what)
        assert rows[0].value_lo > rows[1].value_hi


def test_curve_csv_roundtrip(tmp_path):
    rows = sample_curve(1.5, 2.0, 4, "both")
    text = curve_csv(rows)
    assert text.splitlines()[0] == "q0,which,value_lo,value_hi,node,case"
    again = parse_curve_csv(text)
    assert again == rows  # bit-for-bit via repr round trip


def test_strict_monotonicity_on_grid():
    grid = [1.1 + 1.9 * i / 39 for i in range(40)]
    gs = [generalized_golden_ratio(q).value.mid for q in grid]
    ks = [komornik_loreti(q).value.mid for q in grid]
    for x, y in zip(gs, gs[1:]):
        assert x > y
    for x, y in zip(ks, ks[1:]):
        assert x > y


def test_G_below_K_with_coincidence_detection():
    # G <= K everywhere; equality exactly at the coincidence points
    for q0, coincide in [(1.5, True), (2.0, True), (1.7, False), (1.9, False), (PHI, False)]:
        gv = generalized_golden_ratio(q0).value
        kv = komornik_loreti(q0).value
        assert gv.mid <= kv.mid + 1e-9
        if coincide:
            assert abs(gv.mid - kv.mid) < 1e-9
        else:
            assert kv.mid - gv.mid > 1e-3


def test_depth_exhaustion_brackets():
    # very low depth forces the enclosure-by-adjacent-formulas fallback
    r = komornik_loreti(1.787231650458, max_depth=3)
    assert r.case in (Case.DEPTH_EXHAUSTED, Case.PRIMITIVE_LIMIT)
    full = komornik_loreti(1.787231650458)
    assert r.value.lo - 1e-12 <= full.value.mid <= r.value.hi + 1e-12
    # deeper runs tighten the enclosure
    r2 = komornik_loreti(1.787231650458, max_depth=6)
    assert r2.value.width < r.value.width


def test_distant_bases_need_depth():
    # node intervals advance roughly linearly along the R spine, so the
    # default depth covers a bounded base range and reports an honest
    # enclosure beyond it
    shallow = generalized_golden_ratio(50.0)
    assert shallow.case in (Case.DEPTH_EXHAUSTED, Case.PRIMITIVE_LIMIT)
    assert shallow.value.lo <= 1.0102 <= shallow.value.hi
    deep = generalized_golden_ratio(50.0, max_depth=100)
    assert deep.case is Case.RIGHT_FORMULA
    assert deep.node == "R" * 67
    assert 1 / 51 <= 49 * (deep.value.mid - 1) <= 0.5
    back = generalized_golden_ratio(deep.value.mid, max_depth=100)
    assert abs(back.value.mid - 50.0) < 1e-8


def test_random_grid_robustness():
    import random

    rng = random.Random(11)
    for _ in range(60):
        q0 = 1.05 + rng.random() * 4.0
        rg = generalized_golden_ratio(q0)
        rk = komornik_loreti(q0)
        assert rg.value.lo > 1 and rk.value.lo > 1
        assert rg.value.mid <= rk.value.mid + 1e-9
        if rg.case in (Case.LEFT_FORMULA, Case.RIGHT_FORMULA):
            back = generalized_golden_ratio(rg.value.mid)
            assert abs(back.value.mid - q0) < 1e-8
        pg = (q0 - 1) * (rg.value.mid - 1)
        pk = (q0 - 1) * (rk.value.mid - 1)
        assert pg <= 0.5 + 1e-9 <= pk + 2e-9
