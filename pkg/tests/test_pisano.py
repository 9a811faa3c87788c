import pytest
from hypothesis import given, settings, strategies as st

from pellsum import kernels
from pellsum.pisano import parity_certificate, pisano, residue_sequence, window_divisibility
from pellsum.sequences import builtin, custom, term_mod, terms


def brute_period(spec, m):
    """Smallest period of the residue sequence, found by direct scanning."""
    vals = [v % m for v in terms(spec, 0, 4 * m**spec.order + 10)]
    d = spec.order
    seen = {}
    for i in range(len(vals) - d):
        state = tuple(vals[i:i + d])
        if state in seen:
            return seen[state], i - seen[state]
        seen[state] = i
    raise AssertionError("no cycle")


def test_examples(backend):
    pell = builtin("pell")
    r = pisano(pell, 2)
    assert (r.period, r.preperiod) == (2, 0)
    assert pisano(pell, 3).period == 8
    assert pisano(builtin("fibonacci"), 10).period == 60
    assert pisano(pell, 1).period == 1


def test_parity_certificates(backend):
    cert = parity_certificate(builtin("pell"), 5)
    assert cert.parity == "even" and cert.forced_even
    assert cert.period % 2 == 0 and cert.matrix_order % cert.period == 0
    cert = parity_certificate(builtin("pell"), 2)
    assert (cert.period, cert.parity, cert.forced_even) == (2, "even", False)
    cert = parity_certificate(builtin("genPell", 3, 2), 5)
    assert cert.parity == "even" and cert.forced_even


def test_certificate_needs_invertible_state_map():
    with pytest.raises(ValueError):
        parity_certificate(custom([1, 2], [0, 1]), 4)


def test_window_divisibility(backend):
    pell = builtin("pell")
    assert window_divisibility(pell, 4, 4, 100)
    assert not window_divisibility(pell, 3, 5, 100)
    assert window_divisibility(builtin("fibonacci"), 7, 1, 100)


def test_preperiod_for_non_invertible_map(backend):
    # f(n) = 2 f(n-1) + 2 f(n-2) modulo 4 is eventually zero
    spec = custom([2, 2], [1, 1])
    r = pisano(spec, 4)
    assert (r.preperiod, r.period) == brute_period(spec, 4)
    assert r.preperiod > 0


@settings(max_examples=40, deadline=None)
@given(
    spec=st.sampled_from([builtin("pell"), builtin("fibonacci"), builtin("genPell", 2, 0),
                          custom([3, 2], [1, 4]), custom([0, 1, 5], [2, 0, 1])]),
    m=st.integers(2, 30),
)
def test_matches_brute_force(spec, m):
    m = min(m, int(5000 ** (1 / spec.order)))
    r = pisano(spec, m)
    assert (r.preperiod, r.period) == brute_period(spec, m)


@settings(max_examples=40, deadline=None)
@given(m=st.integers(3, 400))
def test_pell_period_even(m):
    assert pisano(builtin("pell"), m).period % 2 == 0


def test_residues_agree_with_term_mod(backend):
    spec = builtin("genFib", 3)
    assert residue_sequence(spec, 7, 50) == [term_mod(spec, n, 7) for n in range(50)]


def test_large_modulus_falls_back_to_python():
    # beyond the compiled kernels' word size the Python kernel is used
    m = 2**40 + 15
    spec = builtin("fibonacci")
    assert kernels.residues(spec.coeffs, spec.init, m, 300)[-1] == terms(spec, 0, 300)[-1] % m
