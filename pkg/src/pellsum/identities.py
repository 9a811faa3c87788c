"""Finite-range exact verification of sum-of-consecutive-terms identities.

Every verifier is a table of :class:`Check` entries fed to :func:`sweep`.
A check names its parameter axes, the two sides as exact integers and an
optional domain predicate; parameter points outside the domain are skipped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Mapping

from pellsum.quadratic import QuadRat, even_window_coefficient, lucas_roots
from pellsum.sequences import TermTable, builtin


@dataclass(frozen=True)
class Check:
    name: str
    axes: tuple[str, ...]
    lhs: Callable[..., Any]
    rhs: Callable[..., Any]
    domain: Callable[..., bool] | None = None


@dataclass
class VerificationReport:
    identity: str
    rectangle: dict[str, list[int]]
    passed: bool = True
    checked: int = 0
    counterexample: dict[str, Any] | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        cx = None
        if self.counterexample is not None:
            cx = {k: _jsonable(v) for k, v in self.counterexample.items()}
        return {
            "identity": self.identity,
            "rectangle": self.rectangle,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": cx,
            "notes": list(self.notes),
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, (QuadRat, Fraction)):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def sweep(
    identity: str,
    checks: list[Check],
    ranges: Mapping[str, range],
    report: VerificationReport | None = None,
) -> VerificationReport:
    """Evaluate every check on the product of its axes' ranges.

    Stops at the first counterexample.  Equality is exact.
    """
    if report is None:
        report = VerificationReport(
            identity,
            {axis: [r.start, r.stop - 1] for axis, r in ranges.items()},
        )
    for check in checks:
        axes = check.axes
        for point in itertools.product(*(ranges[a] for a in axes)):
            params = dict(zip(axes, point))
            if check.domain is not None and not check.domain(**params):
                continue
            lhs = check.lhs(**params)
            rhs = check.rhs(**params)
            report.checked += 1
            if lhs != rhs:
                report.passed = False
                report.counterexample = {
                    "check": check.name,
                    "params": params,
                    "lhs": lhs,
                    "rhs": rhs,
                }
                return report
    return report


def _tables():
    return {
        name: TermTable(builtin(name), 256)
        for name in ("pell", "pellLucas", "fibonacci", "lucas")
    }


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def pell_4n_constant(N: int) -> int:
    """``(a^(2N) - b^(2N)) / sqrt(2)`` with ``a, b = 1 +- sqrt(2)``, as an integer."""
    a = QuadRat(2, 1, 1)
    value = (a ** (2 * N) - a.conj() ** (2 * N)) / QuadRat.sqrt(2)
    if not value.is_integer():
        raise ArithmeticError(f"Pell constant for N={N} is {value}")
    return int(value.x)


def verify_pell_sum_4n(n_max: int, N_max: int) -> VerificationReport:
    """Sum of 4N consecutive Pell numbers equals ``2P(2N) P(n+2N)``."""
    t = _tables()
    P = t["pell"]
    checks = [
        Check(
            "window-4N",
            ("n", "N"),
            lambda n, N: P.window(n, 4 * N),
            lambda n, N: 2 * P[2 * N] * P[n + 2 * N],
        ),
        # the closed-form constant matches 2P(2N)
        Check(
            "constant",
            ("N",),
            lambda N: pell_4n_constant(N),
            lambda N: 2 * P[2 * N],
        ),
    ]
    return sweep("pell-sum-4N", checks, {"n": range(0, n_max + 1), "N": range(1, N_max + 1)})


def verify_pell_shift(n_max: int, k_max: int) -> VerificationReport:
    """``P(n+k) + (-1)^k P(n-k) = Q(k) P(n)`` for ``n >= k``."""
    t = _tables()
    P, Q = t["pell"], t["pellLucas"]
    checks = [
        Check(
            "shift",
            ("n", "k"),
            lambda n, k: P[n + k] + _sign(k) * P[n - k],
            lambda n, k: Q[k] * P[n],
            lambda n, k: n >= k,
        )
    ]
    return sweep("pell-shift", checks, {"n": range(0, n_max + 1), "k": range(0, k_max + 1)})


def verify_fib_sum_4n(n_max: int, N_max: int) -> VerificationReport:
    """Sum of 4N consecutive Fibonacci numbers equals ``F(2N) L(n+2N+1)``."""
    t = _tables()
    F, L = t["fibonacci"], t["lucas"]
    checks = [
        Check(
            "window-4N",
            ("n", "N"),
            lambda n, N: F.window(n, 4 * N),
            lambda n, N: F[2 * N] * L[n + 2 * N + 1],
        )
    ]
    return sweep("fib-sum-4N", checks, {"n": range(0, n_max + 1), "N": range(1, N_max + 1)})


def verify_fib_sum_4n2(n_max: int, N_max: int) -> VerificationReport:
    """Sum of 4N+2 consecutive Fibonacci numbers equals ``L(2N+1) F(n+2N+2)``.

    ``N = 0`` is included: it is the defining recurrence.
    """
    t = _tables()
    F, L = t["fibonacci"], t["lucas"]
    checks = [
        Check(
            "window-4N+2",
            ("n", "N"),
            lambda n, N: F.window(n, 4 * N + 2),
            lambda n, N: L[2 * N + 1] * F[n + 2 * N + 2],
        )
    ]
    return sweep("fib-sum-4N+2", checks, {"n": range(0, n_max + 1), "N": range(0, N_max + 1)})


def verify_fib_shift(n_max: int, k_max: int) -> VerificationReport:
    t = _tables()
    F, L = t["fibonacci"], t["lucas"]
    checks = [
        Check(
            "shift",
            ("n", "k"),
            lambda n, k: F[n + k] + _sign(k) * F[n - k],
            lambda n, k: L[k] * F[n],
            lambda n, k: n >= k,
        )
    ]
    return sweep("fib-shift", checks, {"n": range(0, n_max + 1), "k": range(0, k_max + 1)})


def verify_fib_auxiliary(n_max: int, k_max: int) -> VerificationReport:
    """Cassini, addition, Lucas-from-Fibonacci, partial sums, telescoping."""
    t = _tables()
    F, L = t["fibonacci"], t["lucas"]
    checks = [
        Check(
            "cassini",
            ("n",),
            lambda n: F[n - 1] * F[n + 1] - F[n] ** 2,
            lambda n: _sign(n),
            lambda n: n >= 1,
        ),
        Check(
            "addition",
            ("n", "k"),
            lambda n, k: F[n + k],
            lambda n, k: F[n] * F[k - 1] + F[n + 1] * F[k],
            lambda n, k: k >= 1,
        ),
        Check(
            "lucas",
            ("n",),
            lambda n: F[n - 1] + F[n + 1],
            lambda n: L[n],
            lambda n: n >= 1,
        ),
        Check(
            "partial-sum",
            ("n",),
            lambda n: F.window(0, n) + 1,
            lambda n: F[n + 1],
            lambda n: n >= 1,
        ),
        Check(
            "telescoping",
            ("n", "k"),
            lambda n, k: F.window(n, k + 1),
            lambda n, k: F[n + k + 2] - F[n + 1],
        ),
    ]
    return sweep("fib-aux", checks, {"n": range(0, n_max + 1), "k": range(0, k_max + 1)})


def verify_general_r_sum(r: int, n_max: int, N_max: int) -> VerificationReport:
    """Identities for ``f(n) = r f(n-1) + f(n-2)``, ``f(0)=0, f(1)=1``.

    With ``g`` the companion sequence (``g(0)=2, g(1)=r``):
    shift ``f(n+k) + (-1)^k f(n-k) = g(k) f(n)``, partial sums
    ``r * sum_{j<=n} f(j) = f(n) + f(n+1) - 1``, and the 4N+2 window
    ``sum = g(2N+1) (f(n+2N+1) + f(n+2N)) / r`` with ``r | g(2N+1)``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    f = TermTable(builtin("lucasU", r, 1), 256)
    g = TermTable(builtin("lucasV", r, 1), 64)
    checks = [
        Check(
            "shift",
            ("n", "k"),
            lambda n, k: f[n + k] + _sign(k) * f[n - k],
            lambda n, k: g[k] * f[n],
            lambda n, k: n >= k,
        ),
        Check(
            "partial-sum",
            ("n",),
            lambda n: r * f.window(0, n + 1),
            lambda n: f[n] + f[n + 1] - 1,
        ),
        Check(
            "g-divisible",
            ("N",),
            lambda N: g[2 * N + 1] % r,
            lambda N: 0,
        ),
        Check(
            "window-4N+2",
            ("n", "N"),
            lambda n, N: Fraction(f.window(n, 4 * N + 2)),
            lambda n, N: Fraction(g[2 * N + 1] * (f[n + 2 * N + 1] + f[n + 2 * N]), r),
        ),
    ]
    return sweep(
        f"general-r-sum(r={r})",
        checks,
        {"n": range(0, n_max + 1), "N": range(0, N_max + 1), "k": range(0, N_max + 1)},
    )


def _even_window_coefficient_int(r: int, N: int) -> int:
    value = even_window_coefficient(r, N)
    if isinstance(value, QuadRat):
        if not value.is_integer():
            raise ArithmeticError(f"coefficient for r={r}, N={N} is {value}")
        return int(value.x)
    if value.denominator != 1:
        raise ArithmeticError(f"coefficient for r={r}, N={N} is {value}")
    return int(value)


def verify_lucas_converse(
    n_max: int, N_max: int, s_minus_one_r: tuple[int, ...] = (1, 3, 4)
) -> VerificationReport:
    """Companion-sequence and alternating-sign window identities.

    * Lucas: ``sum_{i<4N+2} L(n+i) = L(2N+1) L(2N+n+2)``
    * Pell-Lucas: ``sum_{i<4N} Q(n+i) = 2P(2N) Q(2N+n)``
    * alternating Fibonacci and Pell windows (``n >= 1``)
    * ``s = -1``: ``sum_{i=0}^{N} U(n+i) = c(N) U(n+N/2)`` for even ``N``,
      for both kinds, with ``c(N)`` evaluated in the quadratic field.
    """
    t = _tables()
    F, P, L, Q = t["fibonacci"], t["pell"], t["lucas"], t["pellLucas"]
    checks = [
        Check(
            "lucas-4N+2",
            ("n", "N"),
            lambda n, N: L.window(n, 4 * N + 2),
            lambda n, N: L[2 * N + 1] * L[2 * N + n + 2],
        ),
        Check(
            "pell-lucas-4N",
            ("n", "N"),
            lambda n, N: Q.window(n, 4 * N),
            lambda n, N: 2 * P[2 * N] * Q[2 * N + n],
            lambda n, N: N >= 1,
        ),
        Check(
            "alternating-fibonacci",
            ("n", "N"),
            lambda n, N: sum(_sign(n + i) * F[n + i] for i in range(4 * N + 2)),
            lambda n, N: L[2 * N + 1] * _sign(2 * N + n - 1) * F[2 * N + n - 1],
            lambda n, N: n >= 1,
        ),
        Check(
            "alternating-pell",
            ("n", "N"),
            lambda n, N: sum(_sign(n + i) * P[n + i] for i in range(4 * N)),
            lambda n, N: 2 * P[2 * N] * _sign(2 * N + n - 1) * P[2 * N + n - 1],
            lambda n, N: n >= 1 and N >= 1,
        ),
    ]
    for r in s_minus_one_r:
        for kind, name in (("first", "lucasU"), ("second", "lucasV")):
            U = TermTable(builtin(name, r, -1), 128)
            checks.append(
                Check(
                    f"s=-1 {kind} kind r={r}",
                    ("n", "N"),
                    lambda n, N, U=U: U.window(n, N + 1),
                    lambda n, N, U=U, r=r: _even_window_coefficient_int(r, N) * U[n + N // 2],
                    lambda n, N: N % 2 == 0,
                )
            )
    return sweep("lucas-converse", checks, {"n": range(0, n_max + 1), "N": range(0, N_max + 1)})


def s_minus_one_coefficients(r: int, N_max: int) -> dict[int, Any]:
    """Exact ``c(N)`` for even ``N <= N_max`` (kept as field elements)."""
    lucas_roots(r, -1)  # rejects a double root early
    return {N: even_window_coefficient(r, N) for N in range(0, N_max + 1, 2)}


def verify_gen_pell_identities(k_max: int, n_max: int) -> VerificationReport:
    """Generalized Pell ``(k, i)`` sums.

    * ``sum_{j<=n} P_k^{k-1}(j) = (sum_{i=0}^{k} P_k^{k-1}(n-i+1) - 1) / 2`` for ``n >= k-1``
    * ``sum_{j<2k+2} P_k^{k-1}(n+j) = 4 P_k^{k-1}(n+2k)`` for ``n >= k``
    * ``P_k^{k-1-j}(n) = P_k^{k-1}(n) + sum_{i<j} P_k^{k-1}(n-k+i)`` for ``n > k``
    * ``P_k^{k-1}(k+i) = 2^i`` for ``1 <= i <= k``
    """
    top = {k: TermTable(builtin("genPell", k, k - 1), 256) for k in range(1, k_max + 1)}
    every = {
        (k, i): TermTable(builtin("genPell", k, i), 256)
        for k in range(1, k_max + 1)
        for i in range(k)
    }
    checks = [
        Check(
            "partial-sum",
            ("k", "n"),
            lambda k, n: 2 * top[k].window(0, n + 1),
            lambda k, n: sum(top[k][n - i + 1] for i in range(k + 1)) - 1,
            lambda k, n: n >= k - 1,
        ),
        Check(
            "window-2k+2",
            ("k", "n"),
            lambda k, n: top[k].window(n, 2 * k + 2),
            lambda k, n: 4 * top[k][n + 2 * k],
            lambda k, n: n >= k,
        ),
        Check(
            "i-reduction",
            ("k", "j", "n"),
            lambda k, j, n: every[k, k - 1 - j][n],
            lambda k, j, n: top[k][n] + sum(top[k][n - k + i] for i in range(j)),
            lambda k, j, n: j <= k - 1 and n > k,
        ),
        Check(
            "early-powers",
            ("k", "j"),
            lambda k, j: top[k][k + j],
            lambda k, j: 2 ** j,
            lambda k, j: 1 <= j <= k,
        ),
    ]
    return sweep(
        "gen-pell",
        checks,
        {"k": range(1, k_max + 1), "n": range(0, n_max + 1), "j": range(0, k_max + 1)},
    )


VERIFIERS: dict[str, Callable[..., VerificationReport]] = {
    "pell-sum-4N": lambda n_max, N_max, **_: verify_pell_sum_4n(n_max, N_max),
    "pell-shift": lambda n_max, k_max, **_: verify_pell_shift(n_max, k_max),
    "fib-sum-4N": lambda n_max, N_max, **_: verify_fib_sum_4n(n_max, N_max),
    "fib-sum-4N+2": lambda n_max, N_max, **_: verify_fib_sum_4n2(n_max, N_max),
    "fib-shift": lambda n_max, k_max, **_: verify_fib_shift(n_max, k_max),
    "fib-aux": lambda n_max, k_max, **_: verify_fib_auxiliary(n_max, k_max),
    "general-r-sum": lambda n_max, N_max, r_max=6, **_: _all_r(r_max, n_max, N_max),
    "lucas-converse": lambda n_max, N_max, **_: verify_lucas_converse(n_max, N_max),
    "gen-pell": lambda n_max, k_max, **_: verify_gen_pell_identities(k_max, n_max),
}


def _all_r(r_max: int, n_max: int, N_max: int) -> VerificationReport:
    merged = VerificationReport(
        "general-r-sum",
        {"r": [2, r_max], "n": [0, n_max], "N": [0, N_max]},
    )
    for r in range(2, r_max + 1):
        rep = verify_general_r_sum(r, n_max, N_max)
        merged.checked += rep.checked
        if not rep.passed:
            merged.passed = False
            merged.counterexample = dict(rep.counterexample or {}, r=r)
            break
    return merged


def verify(identity: str, n_max: int = 100, N_max: int = 10, k_max: int = 10, r_max: int = 6):
    """Run one verifier by id."""
    try:
        fn = VERIFIERS[identity]
    except KeyError:
        raise ValueError(f"unknown identity {identity!r}; choose from {sorted(VERIFIERS)}")
    return fn(n_max=n_max, N_max=N_max, k_max=k_max, r_max=r_max)
