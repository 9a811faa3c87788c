"""The compiled kernels must agree with the pure-Python ones."""

import pytest
from hypothesis import given, settings, strategies as st

from pellsum import _pykernels, kernels

native = kernels._native
needs_native = pytest.mark.skipif(native is None, reason="compiled kernels not built")

recurrences = st.sampled_from(
    [([2, 1], [0, 1]), ([1, 1], [0, 1]), ([2, 0, 1], [0, 1, 1]), ([3, -1], [2, 3]),
     ([1, 1, 1, 1], [0, 0, 0, 1]), ([2, 2], [1, 1]), ([-5, 7, 2], [3, -1, 4])]
)


@needs_native
@settings(max_examples=80, deadline=None)
@given(rec=recurrences, m=st.integers(2, 5000), count=st.integers(0, 300))
def test_residues_parity(rec, m, count):
    coeffs, init = rec
    assert native.residues(coeffs, init, m, count) == _pykernels.residues(coeffs, init, m, count)


@needs_native
@settings(max_examples=80, deadline=None)
@given(rec=recurrences, m=st.integers(2, 300))
def test_state_cycle_parity(rec, m):
    coeffs, init = rec
    m = min(m, int(20000 ** (1 / len(coeffs))))  # keep the state space small
    assert native.state_cycle(coeffs, init, m) == _pykernels.state_cycle(coeffs, init, m)


@needs_native
@settings(max_examples=80, deadline=None)
@given(rec=recurrences, m=st.integers(2, 50), N=st.integers(1, 12), horizon=st.integers(0, 80))
def test_windows_vanish_parity(rec, m, N, horizon):
    coeffs, init = rec
    assert native.windows_vanish(coeffs, init, m, N, horizon) == _pykernels.windows_vanish(
        coeffs, init, m, N, horizon
    )


@needs_native
@settings(max_examples=60, deadline=None)
@given(n=st.integers(0, 12), k=st.integers(1, 4), a=st.integers(1, 3), b=st.integers(1, 2))
def test_count_tilings_parity(n, k, a, b):
    assert native.count_tilings(n, k, a, b) == _pykernels.count_tilings(n, k, a, b)


@needs_native
def test_native_rejects_wide_modulus():
    with pytest.raises(OverflowError):
        native.residues([1, 1], [0, 1], 2**40, 5)


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_known_values(backend):
    assert kernels.state_cycle([2, 1], [0, 1], 3) == (0, 8)
    assert kernels.state_cycle([1, 1], [0, 1], 10) == (0, 60)
    assert kernels.count_tilings(3, 2, 2, 1) == 9
