"""Generalized Pell (k, i) and order-k Fibonacci checks."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from pellsum.identities import Check, VerificationReport, sweep
from pellsum.pisano import residue_sequence
from pellsum.relations import DEFAULT_HORIZON, search_relation
from pellsum.sequences import TermTable, builtin, companion_matrix, determinant, terms


@dataclass
class ConjectureScanResult:
    k: int
    i: int
    N_range: tuple[int, int]
    horizon: int
    found_windows: list[tuple[int, int, int]] = field(default_factory=list)
    status: str = "verified up to horizon"

    @property
    def matches_conjecture(self) -> bool:
        return self.found_windows == [(2 * self.k + 2, 4, 2 * self.k)]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["found_windows"] = [list(w) for w in self.found_windows]
        d["N_range"] = list(self.N_range)
        d["matches_conjecture"] = self.matches_conjecture
        return d


def gen_pell_sum_check(k: int, i: int, n_max: int) -> VerificationReport:
    """``sum_{j<2k+2} P_k^i(n+j) = 4 P_k^i(n+2k)`` for ``k <= n <= n_max``."""
    if k < 1 or not 0 <= i <= k - 1:
        raise ValueError(f"need k >= 1 and 0 <= i <= k-1, got k={k}, i={i}")
    P = TermTable(builtin("genPell", k, i), n_max + 2 * k + 4)
    check = Check(
        "window-2k+2",
        ("n",),
        lambda n: P.window(n, 2 * k + 2),
        lambda n: 4 * P[n + 2 * k],
    )
    return sweep(f"gen-pell-sum(k={k},i={i})", [check], {"n": range(k, n_max + 1)})


def conjecture_scan(
    k: int, i: int, N_max: int, horizon: int = DEFAULT_HORIZON
) -> ConjectureScanResult:
    """Search every window length ``2..N_max`` on ``P_k^i``.

    The length-1 window is the trivial relation and is not scanned.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    spec = builtin("genPell", k, i)
    table = TermTable(spec, horizon + 2 * N_max + 8)
    result = ConjectureScanResult(k, i, (2, N_max), horizon)
    for N in range(2, N_max + 1):
        v = search_relation(spec, N, horizon=horizon, table=table)
        if v.found:
            result.found_windows.append((N, v.C, v.offset))
    return result


def _top_early_values(k: int) -> dict[str, tuple[int, int]]:
    P = TermTable(builtin("genPell", k, k - 1), 2 * k + 8)
    return {
        "P(2k+1)": (P[2 * k + 1], 2 ** (k + 1) + 1),
        "P(2k+2)": (P[2 * k + 2], 2 ** (k + 2) + 4),
        "P(2k+3)": (P[2 * k + 3], 2 ** (k + 3) + 12),
    }


def mod2_pattern_holds(k: int, n_max: int) -> bool:
    """``P_k^{k-1}(n)`` is odd exactly when ``(k+1) | (n+1)``."""
    res = residue_sequence(builtin("genPell", k, k - 1), 2, n_max + 1)
    return all(res[n] == (1 if (n + 1) % (k + 1) == 0 else 0) for n in range(n_max + 1))


def _odd_window_hits(spec, windows, horizon):
    table = TermTable(spec, horizon + max(windows, default=1) + 8)
    hits = []
    for W in windows:
        v = search_relation(spec, W, horizon=horizon, table=table)
        if v.found:
            hits.append((W, v.C, v.offset))
    return hits


def odd_window_constraints(k: int, N_odd_max: int, horizon: int = DEFAULT_HORIZON) -> dict:
    """Even ``k``: early closed forms, mod-2 pattern, and no odd-window hits.

    Any odd-window relation would need an odd multiplier and a window longer
    than ``2k+2``; the scan confirms none occurs for odd windows ``3..N_odd_max``.
    """
    if k < 2 or k % 2:
        raise ValueError("k must be an even integer >= 2")
    early = _top_early_values(k)
    spec = builtin("genPell", k, k - 1)
    hits = _odd_window_hits(spec, range(3, N_odd_max + 1, 2), horizon)
    mod2 = mod2_pattern_holds(k, 200)
    early_ok = all(a == b for a, b in early.values())
    return {
        "k": k,
        "early_values": {name: list(v) for name, v in early.items()},
        "early_values_ok": early_ok,
        "mod2_pattern_ok": mod2,
        "odd_window_hits": [list(h) for h in hits],
        "constraints_hold": all(C % 2 == 1 and W > 2 * k + 2 for W, C, _ in hits),
        "passed": early_ok and mod2 and not hits,
        "status": "verified up to horizon",
    }


def gen_pell_odd_window(k: int, N_odd_max: int, horizon: int = DEFAULT_HORIZON) -> dict:
    """Odd ``k``: the generating matrix has determinant -1 and no odd window works."""
    if k < 1 or k % 2 == 0:
        raise ValueError("k must be odd")
    spec = builtin("genPell", k, k - 1)
    det = determinant(companion_matrix(spec))
    hits = _odd_window_hits(spec, range(3, N_odd_max + 1, 2), horizon)
    return {
        "k": k,
        "determinant": det,
        "odd_window_hits": [list(h) for h in hits],
        "passed": det == -1 and not hits,
        "status": "verified up to horizon",
    }


def gen_fib_one_based(k: int, count: int) -> list[int]:
    """Order-k Fibonacci numbers on the one-based indexing, ``f(0)`` taken as 0."""
    return [0] + terms(builtin("genFib", k), 0, count - 1)


def gen_fib_checks(k: int, r_max: int) -> VerificationReport:
    """Growth inequalities for order-k Fibonacci numbers (one-based index).

    * ``sum_{n<=r} f(n) < f(r+2)`` for ``r > 2k+1``
    * ``f(n+1) < 2 f(n)`` for ``n > 2k+1``
    * ``2 f(n+2N) < sum_{i<=2N} f(n+i) < 2 f(n+2N+1)`` for ``2N > k+1``
      and ``n + 2N > 2k+1``
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    f = gen_fib_one_based(k, r_max + 4)
    prefix = [0]
    for v in f:
        prefix.append(prefix[-1] + v)

    def window(n: int, length: int) -> int:
        return prefix[n + length] - prefix[n]

    checks = [
        Check(
            "prefix-below-f(r+2)",
            ("r",),
            lambda r: prefix[r + 1] < f[r + 2],
            lambda r: True,
            lambda r: r > 2 * k + 1,
        ),
        Check(
            "ratio-below-2",
            ("r",),
            lambda r: f[r + 1] < 2 * f[r],
            lambda r: True,
            lambda r: r > 2 * k + 1,
        ),
        Check(
            "odd-window-sandwich",
            ("n", "N"),
            lambda n, N: 2 * f[n + 2 * N] < window(n, 2 * N + 1) < 2 * f[n + 2 * N + 1],
            lambda n, N: True,
            lambda n, N: 2 * N > k + 1 and n + 2 * N > 2 * k + 1 and n + 2 * N + 1 <= r_max,
        ),
    ]
    return sweep(
        f"gen-fib(k={k})",
        checks,
        {"r": range(0, r_max + 1), "n": range(1, r_max + 1), "N": range(1, r_max // 2 + 1)},
    )


def gen_fib_odd_window_scan(k: int, N_odd_max: int, horizon: int = DEFAULT_HORIZON) -> dict:
    """Odd windows on order-k Fibonacci (``k`` even).

    Windows longer than ``k+2`` must give no relation.  Shorter odd windows
    are outside the argument's hypothesis and are listed separately.
    """
    if k < 2 or k % 2:
        raise ValueError("k must be an even integer >= 2")
    spec = builtin("genFib", k)
    long_windows = [W for W in range(3, N_odd_max + 1, 2) if W > k + 2]
    short_windows = [W for W in range(3, N_odd_max + 1, 2) if W <= k + 2]
    hits = _odd_window_hits(spec, long_windows, horizon)
    short = _odd_window_hits(spec, short_windows, horizon)
    return {
        "k": k,
        "windows_checked": long_windows,
        "hits": [list(h) for h in hits],
        "short_window_relations": [list(h) for h in short],
        "passed": not hits,
        "status": "verified up to horizon",
    }
