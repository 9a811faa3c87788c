"""Pure-Python kernels; same signatures as the compiled ``_ckernels``."""

from __future__ import annotations

from typing import Sequence


def _stepper(coeffs: Sequence[int], m: int):
    rev = [c % m for c in reversed(coeffs)]  # rev[j] multiplies state[j]

    def step(state: tuple[int, ...]) -> tuple[int, ...]:
        nxt = sum(c * v for c, v in zip(rev, state)) % m
        return state[1:] + (nxt,)

    return step


def residues(coeffs: Sequence[int], init: Sequence[int], m: int, count: int) -> list[int]:
    """First ``count`` terms reduced mod ``m``."""
    d = len(coeffs)
    rev = [c % m for c in reversed(coeffs)]
    vals = [v % m for v in init]
    while len(vals) < count:
        window = vals[-d:]
        vals.append(sum(c * v for c, v in zip(rev, window)) % m)
    return vals[:count]


def state_cycle(coeffs: Sequence[int], init: Sequence[int], m: int) -> tuple[int, int]:
    """``(preperiod, period)`` of the residue state sequence (Brent)."""
    step = _stepper(coeffs, m)
    x0 = tuple(v % m for v in init)
    power = lam = 1
    tortoise, hare = x0, step(x0)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = step(hare)
        lam += 1
    tortoise = hare = x0
    for _ in range(lam):
        hare = step(hare)
    mu = 0
    while tortoise != hare:
        tortoise = step(tortoise)
        hare = step(hare)
        mu += 1
    return mu, lam


def windows_vanish(
    coeffs: Sequence[int], init: Sequence[int], m: int, N: int, horizon: int
) -> bool:
    """True iff every length-``N`` window starting at ``0..horizon`` is 0 mod m."""
    vals = residues(coeffs, init, m, horizon + N)
    acc = sum(vals[:N]) % m
    for n in range(horizon + 1):
        if acc:
            return False
        if n < horizon:
            acc = (acc - vals[n] + vals[n + N]) % m
    return True


def count_tilings(n: int, k: int, a: int, b: int) -> int:
    """Count tilings of a 1 x n board by visiting every one of them.

    Squares come in ``a`` colours and ``(k+1)``-ominoes in ``b`` kinds.
    """
    omino = k + 1

    def walk(rem: int) -> int:
        if rem == 0:
            return 1
        total = 0
        for _ in range(a):
            total += walk(rem - 1)
        if rem >= omino:
            for _ in range(b):
                total += walk(rem - omino)
        return total

    return walk(n)
