import pytest
from hypothesis import given, settings, strategies as st

from pellsum.sequences import builtin, terms
from pellsum.tilings import (
    TilingConfig,
    block_sum_check,
    count_dp,
    enumerate_count,
    format_tiling,
    partial_sum_from_blocks,
    tilings,
)

PELL = terms(builtin("pell"), 0, 40)


def test_enumerate_examples(backend):
    cfg = TilingConfig(1, 2)
    assert enumerate_count(cfg) == 5 == PELL[3]
    assert sorted(format_tiling(t, cfg) for t in tilings(cfg)) == ["B B", "B W", "G2", "W B", "W W"]
    assert enumerate_count(TilingConfig(1, 0)) == 1 == PELL[1]
    assert enumerate_count(TilingConfig(2, 3)) == 9


def test_count_dp_examples():
    assert count_dp(TilingConfig(1, 15)) == 470832 == PELL[16]
    G = terms(builtin("genPell", 2, 1), 0, 210)
    assert all(count_dp(TilingConfig(2, n)) == G[n + 2] for n in range(201))
    assert all(count_dp(TilingConfig(k, 0, 3, 2)) == 1 for k in range(1, 6))


def test_listing_is_lexicographic_and_valid():
    cfg = TilingConfig(2, 5, 3, 2)
    listing = list(tilings(cfg))
    assert len(listing) == len(set(listing)) == count_dp(cfg)
    for t in listing:
        assert sum(p.length for p in t) == 5
        assert all(p.index < (3 if p.kind == "square" else 2) for p in t)


@settings(max_examples=40, deadline=None)
@given(k=st.integers(1, 3), n=st.integers(0, 9), a=st.integers(1, 3), b=st.integers(1, 2))
def test_enumeration_matches_dp(k, n, a, b):
    cfg = TilingConfig(k, n, a, b)
    assert enumerate_count(cfg) == count_dp(cfg) == sum(1 for _ in tilings(cfg))


def test_block_sum_examples():
    p = [count_dp(TilingConfig(1, n)) for n in range(10)]
    assert p[4] == 29 == 2 * (p[1] + p[3]) + 1
    assert p[3] == 12 == 2 * (p[0] + p[2])
    q = [count_dp(TilingConfig(2, n, 3, 2)) for n in range(10)]
    assert q[6] == 3 * (2 * q[2] + q[5]) + 2**2


@pytest.mark.parametrize("a, b", [(2, 1), (3, 1), (3, 2)])
def test_block_sums(a, b):
    for k in range(1, 5):
        assert block_sum_check(k, 120, a, b).passed


def test_literal_plus_one_fails_with_weighted_ominoes():
    # with b > 1 the all-omino tiling has weight b^(n+1), not 1
    k, a, b = 1, 2, 2
    p = [count_dp(TilingConfig(k, m, a, b)) for m in range(5)]
    # r = k = 1, n = 0: p_2 = a p_1 + (all-omino weight)
    assert p[2] == 6 != a * p[1] + 1
    assert p[2] == a * p[1] + b
    # n = 1: p_4 = a (b p_1 + p_3) + b^2
    assert p[4] != a * (b * p[1] + p[3]) + 1
    assert p[4] == a * (b * p[1] + p[3]) + b**2


def test_partial_sums_follow_from_blocks():
    for k in range(1, 6):
        assert partial_sum_from_blocks(k, 150).passed


def test_enumeration_cap():
    with pytest.raises(ValueError):
        enumerate_count(TilingConfig(1, 40))


@pytest.mark.parametrize("args", [(0, 3), (1, -1), (1, 3, 0, 1), (1, 3, 2, 0)])
def test_invalid_config(args):
    with pytest.raises(ValueError):
        TilingConfig(*args)
