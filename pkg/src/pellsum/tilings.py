"""Tilings of a 1 x n board by coloured squares and (k+1)-ominoes.

With ``a`` square colours and ``b`` omino kinds the number of tilings
``p_{k,n}`` obeys ``p_n = a p_{n-1} + b p_{n-k-1}`` with ``p_0 = 1``.  The
plain case ``(a, b) = (2, 1)`` (black and white squares, grey ominoes)
gives ``p_{k,n} = P_k^{k-1}(n + k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from pellsum import kernels
from pellsum.identities import Check, VerificationReport, sweep

# exhaustive enumeration refuses boards with more tilings than this
MAX_ENUMERATION = 5 * 10**7

_PLAIN_COLOURS = "BW"


@dataclass(frozen=True)
class TilingConfig:
    k: int
    n: int
    a: int = 2
    b: int = 1

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.n < 0:
            raise ValueError("board length must be non-negative")
        if self.a < 1 or self.b < 1:
            raise ValueError("weights must be positive")


@dataclass(frozen=True)
class Piece:
    kind: str  # "square" or "omino"
    index: int  # colour or omino kind
    length: int

    def code(self, config: TilingConfig) -> str:
        if self.kind == "square":
            if config.a <= 2:
                return _PLAIN_COLOURS[self.index]
            return f"S{self.index}"
        if config.b == 1:
            return f"G{self.length}"
        return f"G{self.length}.{self.index}"


Tiling = tuple[Piece, ...]


def count_dp(config: TilingConfig) -> int:
    """Weighted tiling count from the recurrence."""
    k, n, a, b = config.k, config.n, config.a, config.b
    p = [1]
    for m in range(1, n + 1):
        v = a * p[m - 1]
        if m >= k + 1:
            v += b * p[m - k - 1]
        p.append(v)
    return p[n]


def _check_size(config: TilingConfig) -> None:
    total = count_dp(config)
    if total > MAX_ENUMERATION:
        raise ValueError(f"{total} tilings exceed the enumeration cap {MAX_ENUMERATION}")


def tilings(config: TilingConfig) -> Iterator[Tiling]:
    """Yield every tiling, squares before ominoes at each position."""
    _check_size(config)
    omino = config.k + 1
    squares = [Piece("square", c, 1) for c in range(config.a)]
    ominoes = [Piece("omino", t, omino) for t in range(config.b)]

    def walk(rem: int, prefix: tuple[Piece, ...]) -> Iterator[Tiling]:
        if rem == 0:
            yield prefix
            return
        for sq in squares:
            yield from walk(rem - 1, prefix + (sq,))
        if rem >= omino:
            for om in ominoes:
                yield from walk(rem - omino, prefix + (om,))

    yield from walk(config.n, ())


def enumerate_count(config: TilingConfig) -> int:
    """Count tilings by visiting each one (compiled kernel when available)."""
    _check_size(config)
    return kernels.count_tilings(config.n, config.k, config.a, config.b)


def format_tiling(tiling: Tiling, config: TilingConfig) -> str:
    return " ".join(p.code(config) for p in tiling)


def block_sum_check(k: int, n_max: int, a: int = 2, b: int = 1) -> VerificationReport:
    """Last-square decomposition of ``p_{k,(k+1)n+r+1}``.

    ``p_{(k+1)n+r+1} = a * sum_{m=0}^{n} b^(n-m) p_{(k+1)m+r}``, plus
    ``b^(n+1)`` when ``r = k`` for the tiling made of ominoes only.
    """
    p = [count_dp(TilingConfig(k, m, a, b)) for m in range(n_max + 1)]

    def block(n: int, r: int) -> int:
        total = a * sum(b ** (n - m) * p[(k + 1) * m + r] for m in range(n + 1))
        if r == k:
            total += b ** (n + 1)
        return total

    check = Check(
        "block-sum",
        ("n", "r"),
        lambda n, r: p[(k + 1) * n + r + 1],
        block,
        lambda n, r: r <= k and (k + 1) * n + r + 1 <= n_max,
    )
    report = sweep(
        f"block-sum(k={k},a={a},b={b})",
        [check],
        {"n": range(0, n_max // (k + 1) + 1), "r": range(0, k + 1)},
    )
    return report


def partial_sum_from_blocks(k: int, n_max: int) -> VerificationReport:
    """Generalized Pell partial sums rebuilt from plain block sums.

    Adding the block identities for ``r = 0..k`` gives
    ``sum_{r} p_{(k+1)n+r+1} = 2 sum_{j<=M} p_j + 1`` with ``M = (k+1)n + k``.
    Since ``p_j = P(j+k)`` and ``P(j) = 0`` for ``j < k`` this is
    ``sum_{j<=M+k} P(j) = (sum_{i=0}^{k} P(M+k+1-i) - 1) / 2``.
    """
    from pellsum.sequences import builtin, terms

    P = terms(builtin("genPell", k, k - 1), 0, n_max + 2 * k + 3)
    p = P[k:]

    def block(n: int, r: int) -> int:
        return 2 * sum(p[(k + 1) * m + r] for m in range(n + 1)) + (1 if r == k else 0)

    def top(n: int) -> int:
        M = (k + 1) * n + k
        return sum(P[M + k + 1 - i] for i in range(k + 1))

    def in_range(n: int) -> bool:
        return (k + 1) * n + 2 * k + 1 <= n_max

    checks = [
        Check("summed-blocks", ("n",), top, lambda n: sum(block(n, r) for r in range(k + 1)), in_range),
        Check(
            "partial-sum",
            ("n",),
            lambda n: sum(P[: (k + 1) * n + 2 * k + 1]),
            lambda n: (top(n) - 1) // 2,
            in_range,
        ),
    ]
    return sweep(f"partial-sum-from-blocks(k={k})", checks, {"n": range(0, n_max // (k + 1) + 1)})
