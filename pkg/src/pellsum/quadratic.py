"""Exact arithmetic in quadratic fields Q(sqrt(D)).

Elements are ``x + y*sqrt(D)`` with rational ``x`` and ``y``.  The radicand
is reduced to its squarefree part on construction so that equal field
elements always compare equal.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Union

from pellsum.sequences import builtin, term

Rational = Union[int, Fraction]


def squarefree_part(n: int) -> tuple[int, int]:
    """Return ``(f, core)`` with ``n == f*f*core`` and ``core`` squarefree."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    f, core = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        f *= p ** (e // 2)
        if e % 2:
            core *= p
        p += 1 if p == 2 else 2
    core *= n
    return f, sign * core


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


class QuadRat:
    """An element ``x + y*sqrt(D)`` of a quadratic field."""

    __slots__ = ("D", "x", "y")

    def __init__(self, D: int, x: Rational = 0, y: Rational = 0) -> None:
        if D == 0 or is_square(D):
            raise ValueError(f"radicand {D} is zero or a perfect square")
        f, core = squarefree_part(D)
        self.D = core
        self.x = Fraction(x)
        self.y = Fraction(y) * f

    @classmethod
    def _raw(cls, D: int, x: Fraction, y: Fraction) -> QuadRat:
        obj = cls.__new__(cls)
        obj.D, obj.x, obj.y = D, x, y
        return obj

    @classmethod
    def sqrt(cls, D: int) -> QuadRat:
        return cls(D, 0, 1)

    def _coerce(self, other: object) -> QuadRat | None:
        if isinstance(other, QuadRat):
            if other.D != self.D:
                raise ValueError(f"mixed radicands {self.D} and {other.D}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadRat._raw(self.D, Fraction(other), Fraction(0))
        return None

    def __repr__(self) -> str:
        return f"QuadRat({self.D}, {self.x}, {self.y})"

    def __str__(self) -> str:
        if self.y == 0:
            return str(self.x)
        sign = "-" if self.y < 0 else "+"
        return f"{self.x} {sign} {abs(self.y)}*sqrt({self.D})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadRat):
            return (self.D, self.x, self.y) == (other.D, other.x, other.y)
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.D, self.x, self.y))

    def __add__(self, other: object) -> QuadRat:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat._raw(self.D, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self) -> QuadRat:
        return QuadRat._raw(self.D, -self.x, -self.y)

    def __sub__(self, other: object) -> QuadRat:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat._raw(self.D, self.x - o.x, self.y - o.y)

    def __rsub__(self, other: object) -> QuadRat:
        return -self + other

    def __mul__(self, other: object) -> QuadRat:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadRat._raw(
            self.D,
            self.x * o.x + self.D * self.y * o.y,
            self.x * o.y + self.y * o.x,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> QuadRat:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: object) -> QuadRat:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n: int) -> QuadRat:
        if n < 0:
            return self.inv() ** -n
        result = QuadRat._raw(self.D, Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __bool__(self) -> bool:
        return bool(self.x or self.y)

    def conj(self) -> QuadRat:
        return QuadRat._raw(self.D, self.x, -self.y)

    def norm(self) -> Fraction:
        return self.x * self.x - self.D * self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x

    def inv(self) -> QuadRat:
        if not self:
            raise ZeroDivisionError("inverse of zero")
        n = self.norm()
        return QuadRat._raw(self.D, self.x / n, -self.y / n)

    def is_rational(self) -> bool:
        return self.y == 0

    def is_integer(self) -> bool:
        return self.y == 0 and self.x.denominator == 1


Number = Union[QuadRat, Fraction]


class Roots(NamedTuple):
    alpha: Number
    beta: Number
    rational: bool  # characteristic discriminant is a perfect square


def lucas_roots(r: int, s: int) -> Roots:
    """Roots of ``X^2 - r X - s``, with ``alpha = (r + sqrt(r^2+4s))/2``.

    A perfect-square discriminant gives exact rational roots instead of a
    field element.  A negative discriminant is still handled exactly, the
    roots then live in an imaginary quadratic field.
    """
    delta = r * r + 4 * s
    if delta == 0:
        raise ValueError(f"double root for r={r}, s={s}")
    if is_square(delta):
        root = math.isqrt(delta)
        return Roots(Fraction(r + root, 2), Fraction(r - root, 2), True)
    half = Fraction(1, 2)
    return Roots(
        QuadRat(delta, Fraction(r, 2), half),
        QuadRat(delta, Fraction(r, 2), -half),
        False,
    )


def binet_term(r: int, s: int, kind: str, n: int) -> int:
    """Evaluate a Lucas sequence term through its closed form.

    ``kind="first"`` gives ``U(n) = (alpha^n - beta^n)/(alpha - beta)``,
    ``kind="second"`` gives ``V(n) = alpha^n + beta^n``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    alpha, beta, _ = lucas_roots(r, s)
    if kind == "first":
        value = (alpha ** n - beta ** n) / (alpha - beta)
    elif kind == "second":
        value = alpha ** n + beta ** n
    else:
        raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
    if isinstance(value, QuadRat):
        if not value.is_integer():
            raise ArithmeticError(f"closed form gave non-integer {value}")
        return int(value.x)
    if value.denominator != 1:
        raise ArithmeticError(f"closed form gave non-integer {value}")
    return int(value)


PHI = QuadRat(5, Fraction(1, 2), Fraction(1, 2))


def phi_power(n: int) -> QuadRat:
    """``phi**n``, checked against ``F(n)*phi + F(n-1)``."""
    if n < 1:
        raise ValueError("n must be positive")
    value = PHI ** n
    fib = builtin("fibonacci")
    expected = term(fib, n) * PHI + term(fib, n - 1)
    if value != expected:
        raise ArithmeticError(f"phi^{n} = {value} but F-form gives {expected}")
    return value


def _real_alpha(r: int, s: int) -> QuadRat:
    delta = r * r + 4 * s
    if delta <= 0 or is_square(delta):
        raise ValueError(f"r^2+4s = {delta} must be positive and not a square")
    alpha = lucas_roots(r, s).alpha
    assert isinstance(alpha, QuadRat)
    return alpha


def closed_form_constant(r: int, s: int, N: int, k: int) -> QuadRat:
    """``sum_{i=0}^{N-1} alpha^(i-k)`` for the dominant root ``alpha``.

    The window relation with offset ``k`` can hold only when this is a
    positive integer, which is then the multiplier.
    """
    if N < 1:
        raise ValueError("N must be positive")
    alpha = _real_alpha(r, s)
    total = QuadRat(alpha.D)
    step = alpha ** -k
    for _ in range(N):
        total = total + step
        step = step * alpha
    return total


def even_window_coefficient(r: int, N: int) -> Number:
    """Multiplier for ``s = -1`` windows of length ``N + 1`` with ``N`` even.

    Equals ``(alpha^(N/2+1) - alpha^(-N/2)) / (alpha - 1)``; for these
    sequences ``beta = 1/alpha`` so the value is Galois invariant.
    """
    if N < 0 or N % 2:
        raise ValueError("N must be a non-negative even integer")
    alpha = lucas_roots(r, -1).alpha
    h = N // 2
    return (alpha ** (h + 1) - alpha ** (-h)) / (alpha - 1)
