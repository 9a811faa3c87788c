import pytest

from pellsum.relations import (
    analytic_check,
    classify,
    lucas_family_scan,
    offset_in_band,
    scan_r4,
    search_relation,
    verdicts_to_csv,
)
from pellsum.sequences import builtin, custom


def found(verdicts):
    return {v.N: (v.C, v.offset) for v in verdicts if v.found}


def test_search_examples():
    pell = builtin("pell")
    v = search_relation(pell, 4, 1, 100)
    assert (v.found, v.C, v.offset) == (True, 4, 2)
    v = search_relation(pell, 6, 1, 100)
    assert not v.found and v.C is None
    assert v.status == "verified up to horizon"
    assert v.witnesses  # every offset was refuted by a concrete n
    v = search_relation(builtin("fibonacci"), 3, 1, 100)
    assert (v.found, v.C, v.offset) == (True, 2, 2)
    v = search_relation(pell, 1, 1, 100)
    assert (v.found, v.C, v.offset) == (True, 1, 0)


def test_classify_pell():
    assert found(classify(builtin("pell"), 12, 1, 150)) == {
        1: (1, 0), 4: (4, 2), 8: (24, 4), 12: (140, 6)
    }


def test_classify_fibonacci():
    # the window-10 offset is 6: sum_{i<10} F(n+i) = 11 F(n+6)
    assert found(classify(builtin("fibonacci"), 12, 1, 150)) == {
        1: (1, 0), 2: (1, 2), 3: (2, 2), 6: (4, 4), 10: (11, 6)
    }


def test_classify_lucas_window_six():
    assert found(classify(builtin("lucas"), 6, 1, 150))[6] == (4, 4)


def test_analytic_examples():
    a = analytic_check(2, 1, 8, 4)
    assert (a.kind, a.C) == ("integer", 24)
    assert analytic_check(2, 1, 4, 1).kind == "irrational"
    a = analytic_check(1, 1, 2, 2)
    assert (a.kind, a.C) == ("integer", 1)


def test_scan_r4():
    hits = [(v.label, v.C, v.offset) for v in scan_r4(10) if v.found]
    assert hits == [("lucasU(2,1)", 4, 2)]


def test_lucas_family_examples():
    rows = lucas_family_scan([3], [-1, 1], window_max=12, horizon=150)
    by_s = {row["s"]: row for row in rows}
    assert (3, 4, 1) in by_s[-1]["found"]
    assert by_s[1]["found"] == []


def test_degenerate_pairs_skipped():
    rows = lucas_family_scan([1, 2], [-1], window_max=4, horizon=60)
    skipped = {row["r"]: row["skipped"] for row in rows}
    assert skipped[1] is not None  # roots are sixth roots of unity
    assert skipped[2] is not None  # double root


def test_non_integer_constant_reported():
    # f = 2^n: window 2 is 3/2 f(n+1), a constant but non-integer ratio
    v = search_relation(custom([2], [1]), 2, 0, 50, offsets=[1])
    assert not v.found and v.rational_constant == "3/2"


@pytest.mark.parametrize("N, k, ok", [(4, 2, True), (4, 1, False), (5, 3, True), (6, 7, False)])
def test_offset_band(N, k, ok):
    assert offset_in_band(N, k) is ok


def test_csv_header():
    text = verdicts_to_csv(classify(builtin("pell"), 2, horizon=40))
    assert text.splitlines()[0] == "label,N,found,C,k,horizon"


def test_horizon_must_cover_a_few_indices():
    with pytest.raises(ValueError):
        search_relation(builtin("pell"), 2, n_min=10, horizon=11)
