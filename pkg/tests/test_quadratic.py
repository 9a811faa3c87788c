from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pellsum.quadratic import (
    PHI,
    QuadRat,
    binet_term,
    closed_form_constant,
    even_window_coefficient,
    lucas_roots,
    phi_power,
    squarefree_part,
)
from pellsum.sequences import builtin, terms


def test_squarefree_part():
    assert squarefree_part(8) == (2, 2)
    assert squarefree_part(-12) == (2, -3)
    assert squarefree_part(7) == (1, 7)


def test_sqrt_normalizes():
    assert QuadRat(8, 0, 1) == QuadRat(2, 0, 2)
    with pytest.raises(ValueError):
        QuadRat(4, 1, 1)  # a square radicand is not a quadratic field


def test_arithmetic_examples():
    a = QuadRat(2, 1, 1)
    assert a * a.conj() == QuadRat(2, -1, 0)
    assert a**2 == QuadRat(2, 3, 2)
    psi = QuadRat(5, Fraction(1, 2), Fraction(-1, 2))
    assert PHI.inv() == -psi
    assert PHI.inv() == PHI - 1


def test_mixed_fields_refused():
    with pytest.raises(ValueError):
        QuadRat(2, 0, 1) + QuadRat(3, 0, 1)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        QuadRat(5, 0, 0).inv()


def test_lucas_roots():
    a, b, rational = lucas_roots(2, 1)
    assert (a, b, rational) == (QuadRat(2, 1, 1), QuadRat(2, 1, -1), False)
    assert lucas_roots(1, 1)[:2] == (PHI, PHI.conj())
    a, b, _ = lucas_roots(3, -1)
    assert a == QuadRat(5, Fraction(3, 2), Fraction(1, 2))
    assert a + b == 3 and a * b == 1


def test_double_root_refused():
    with pytest.raises(ValueError):
        lucas_roots(2, -1)


def test_binet_examples():
    assert binet_term(2, 1, "first", 5) == 29
    assert binet_term(1, 1, "second", 4) == 7
    assert binet_term(7, 3, "first", 0) == 0


@pytest.mark.parametrize("r, s", [(1, -1), (1, -2), (3, 2), (5, -6), (4, -3)])
def test_binet_other_discriminants(r, s):
    # negative and square discriminants
    for kind, name in (("first", "lucasU"), ("second", "lucasV")):
        expected = terms(builtin(name, r, s), 0, 40)
        assert [binet_term(r, s, kind, n) for n in range(40)] == expected


def test_phi_power_examples():
    assert phi_power(1) == PHI
    assert phi_power(2) == PHI + 1
    assert phi_power(10) == 55 * PHI + 34


def test_closed_form_constant_examples():
    assert closed_form_constant(2, 1, 8, 4) == 24
    assert closed_form_constant(2, 1, 4, 2) == 4
    assert closed_form_constant(1, 1, 6, 4) == 4
    assert closed_form_constant(2, 1, 4, 1).y != 0


def test_even_window_coefficient():
    assert even_window_coefficient(3, 2) == 4


coords = st.builds(Fraction, st.integers(-200, 200), st.integers(1, 20))
elements = st.builds(lambda D, x, y: QuadRat(D, x, y), st.sampled_from([2, 5, -3]), coords, coords)


@settings(max_examples=100, deadline=None)
@given(a=elements, b=elements)
def test_norm_is_multiplicative(a, b):
    b = QuadRat(a.D, b.x, b.y)
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a * b).conj() == a.conj() * b.conj()


@settings(max_examples=100, deadline=None)
@given(a=elements.filter(bool), n=st.integers(0, 12))
def test_power_inverse(a, n):
    assert a**n * a ** (-n) == 1
    assert a * a.inv() == 1


@settings(max_examples=50, deadline=None)
@given(a=elements, b=elements, c=elements)
def test_distributive(a, b, c):
    b, c = QuadRat(a.D, b.x, b.y), QuadRat(a.D, c.x, c.y)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
