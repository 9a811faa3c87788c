import pytest

from pellsum.higher_order import (
    conjecture_scan,
    gen_fib_checks,
    gen_fib_odd_window_scan,
    gen_fib_one_based,
    gen_pell_odd_window,
    gen_pell_sum_check,
    mod2_pattern_holds,
    odd_window_constraints,
)
from pellsum.sequences import builtin, terms


def test_sum_check_examples():
    # k = 1 is the Pell window-4 identity
    assert gen_pell_sum_check(1, 0, 100).passed
    assert gen_pell_sum_check(2, 1, 100).passed
    assert gen_pell_sum_check(3, 2, 100).passed
    G = terms(builtin("genPell", 3, 2), 0, 20)
    assert sum(G[3:11]) == 4 * G[9]


def test_sum_check_rejects_bad_i():
    with pytest.raises(ValueError):
        gen_pell_sum_check(2, 2, 10)


@pytest.mark.parametrize("k, i, expected", [(2, 1, (6, 4, 4)), (3, 2, (8, 4, 6)), (2, 0, (6, 4, 4))])
def test_conjecture_scan_examples(k, i, expected):
    scan = conjecture_scan(k, i, 20, 200)
    assert scan.found_windows == [expected]
    assert scan.matches_conjecture
    assert scan.to_dict()["matches_conjecture"] is True


def test_odd_window_constraints_even_k():
    report = odd_window_constraints(2, 15, 200)
    assert report["early_values"] == {"P(2k+1)": [9, 9], "P(2k+2)": [20, 20], "P(2k+3)": [44, 44]}
    assert report["passed"]
    assert odd_window_constraints(4, 15, 200)["passed"]
    with pytest.raises(ValueError):
        odd_window_constraints(3, 15)


def test_mod2_pattern():
    assert mod2_pattern_holds(2, 60)
    assert mod2_pattern_holds(5, 80)


def test_odd_window_odd_k():
    report = gen_pell_odd_window(3, 15, 200)
    assert report["determinant"] == -1 and report["odd_window_hits"] == []
    assert gen_pell_odd_window(1, 15, 200)["passed"]


def test_gen_fib_terms():
    # f(0) = ... = f(k-1) = 0 and f(k) = 1
    assert gen_fib_one_based(2, 8) == [0, 0, 1, 1, 2, 3, 5, 8]
    assert gen_fib_one_based(3, 8) == [0, 0, 0, 1, 1, 2, 4, 7]


def test_gen_fib_checks():
    f = gen_fib_one_based(3, 12)
    assert sum(f[:9]) < f[10]
    f2 = gen_fib_one_based(2, 10)
    assert f2[8] < 2 * f2[7]
    for k in (2, 3, 4):
        assert gen_fib_checks(k, 150).passed


def test_gen_fib_odd_windows():
    scan = gen_fib_odd_window_scan(2, 21, 200)
    assert scan["passed"] and scan["hits"] == []
    assert [3, 2, 2] in scan["short_window_relations"]
    assert gen_fib_odd_window_scan(4, 21, 200)["passed"]
