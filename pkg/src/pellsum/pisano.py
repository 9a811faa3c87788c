"""Periods of recurrences reduced modulo m."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from pellsum import kernels
from pellsum.sequences import RecurrenceSpec, companion_matrix, determinant

# largest state space m**d the CLI will walk
MAX_STATES = 10**7


@dataclass(frozen=True)
class PeriodResult:
    modulus: int
    preperiod: int
    period: int

    def to_dict(self) -> dict:
        return asdict(self)


def pisano(spec: RecurrenceSpec, m: int) -> PeriodResult:
    """Minimal period and preperiod of ``spec`` modulo ``m``.

    The state is the tuple of ``d`` consecutive residues, so the sequence is
    eventually periodic with period at most ``m**d``.  ``m = 1`` is accepted
    and gives the trivial period 1.
    """
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if m == 1:
        return PeriodResult(1, 0, 1)
    pre, period = kernels.state_cycle(spec.coeffs, spec.init, m)
    return PeriodResult(m, pre, period)


def _impulse(spec: RecurrenceSpec) -> RecurrenceSpec:
    d = spec.order
    return RecurrenceSpec(spec.coeffs, (0,) * (d - 1) + (1,), "impulse")


@dataclass(frozen=True)
class ParityCertificate:
    modulus: int
    period: int
    parity: str
    matrix_order: int
    determinant: int  # companion determinant reduced mod m
    forced_even: bool
    explanation: str

    def to_dict(self) -> dict:
        return asdict(self)


def parity_certificate(spec: RecurrenceSpec, m: int) -> ParityCertificate:
    """Parity of the period together with the determinant argument.

    If ``M**pi = I`` modulo ``m`` then ``det(M)**pi = 1``; with
    ``det(M) = -1`` and ``m > 2`` this forces ``pi`` even.  The order of
    ``M`` is read off the impulse sequence (zeros then a one), whose state
    vector is cyclic for the companion matrix; the sequence's own period
    divides it.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    if math.gcd(spec.coeffs[-1], m) != 1:
        raise ValueError(f"state map is not invertible modulo {m}")
    period = pisano(spec, m).period
    order = pisano(_impulse(spec), m).period
    det = determinant(companion_matrix(spec)) % m
    forced = m > 2 and det == m - 1
    if forced:
        why = f"det = -1 mod {m} and M^{order} = I give (-1)^{order} = 1, so the order is even"
    elif m == 2:
        why = "-1 = 1 mod 2, determinant gives no parity constraint"
    else:
        why = f"det = {det} mod {m}, no parity constraint from the determinant"
    return ParityCertificate(
        modulus=m,
        period=period,
        parity="even" if period % 2 == 0 else "odd",
        matrix_order=order,
        determinant=det,
        forced_even=forced,
        explanation=why,
    )


def window_divisibility(spec: RecurrenceSpec, N: int, m: int, horizon: int) -> bool:
    """True iff every length-``N`` window sum starting at ``0..horizon`` is 0 mod m."""
    if N < 1:
        raise ValueError("window length must be positive")
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return True
    return kernels.windows_vanish(spec.coeffs, spec.init, m, N, horizon)


def residue_sequence(spec: RecurrenceSpec, m: int, count: int) -> list[int]:
    return kernels.residues(spec.coeffs, spec.init, m, count)
