"""Recurrence descriptors and exact term generation.

A :class:`RecurrenceSpec` describes ``u(n) = c_1 u(n-1) + ... + c_d u(n-d)``
together with the initial values ``u(0), ..., u(d-1)``.  Terms are Python
integers, so every value is exact regardless of size.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

Matrix = list[list[int]]


@dataclass(frozen=True)
class RecurrenceSpec:
    coeffs: tuple[int, ...]
    init: tuple[int, ...]
    label: str = "custom"

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "init", tuple(int(v) for v in self.init))
        if not self.coeffs:
            raise ValueError("order must be at least 1")
        if len(self.init) != len(self.coeffs):
            raise ValueError(
                f"need {len(self.coeffs)} initial values, got {len(self.init)}"
            )
        if self.coeffs[-1] == 0:
            raise ValueError("last coefficient must be nonzero")
        if not any(self.init):
            raise ValueError("initial values are all zero")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @property
    def reversible(self) -> bool:
        """True when the recurrence can be run backwards over the integers."""
        return abs(self.coeffs[-1]) == 1


def _require_int(name: str, value: int, low: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer")
    if low is not None and value < low:
        raise ValueError(f"{name} must be >= {low}, got {value}")
    return value


def builtin(name: str, *params: int) -> RecurrenceSpec:
    """Return one of the named sequences.

    ``pell``, ``fibonacci``, ``lucas`` and ``pellLucas`` take no parameters;
    ``lucasU``/``lucasV`` take ``(r, s)``, ``genPell`` takes ``(k, i)`` and
    ``genFib`` takes ``k``.

    ``genFib(k)`` is stored zero-based: internal index ``j`` is the
    traditional one-based index ``j + 1``, so the single one among the
    initial values sits at internal index ``k - 1``.
    """
    key = name.replace("-", "").replace("_", "").lower()

    def arity(expected: int) -> None:
        if len(params) != expected:
            raise ValueError(f"{name} takes {expected} parameter(s), got {len(params)}")

    if key == "pell":
        arity(0)
        return RecurrenceSpec((2, 1), (0, 1), "pell")
    if key in ("fibonacci", "fib"):
        arity(0)
        return RecurrenceSpec((1, 1), (0, 1), "fibonacci")
    if key == "lucas":
        arity(0)
        return RecurrenceSpec((1, 1), (2, 1), "lucas")
    if key == "pelllucas":
        arity(0)
        return RecurrenceSpec((2, 1), (2, 2), "pellLucas")
    if key in ("lucasu", "lucasv"):
        arity(2)
        r, s = (_require_int(p, v) for p, v in zip("rs", params))
        if s == 0:
            raise ValueError("lucas sequences need s != 0")
        if key == "lucasu":
            return RecurrenceSpec((r, s), (0, 1), f"lucasU({r},{s})")
        return RecurrenceSpec((r, s), (2, r), f"lucasV({r},{s})")
    if key == "genpell":
        arity(2)
        k = _require_int("k", params[0], 1)
        i = _require_int("i", params[1])
        if not 0 <= i <= k - 1:
            raise ValueError(f"genPell needs 0 <= i <= k-1, got k={k}, i={i}")
        coeffs = (2,) + (0,) * (k - 1) + (1,)
        init = (0,) * (i + 1) + (1,) * (k - i)
        return RecurrenceSpec(coeffs, init, f"genPell({k},{i})")
    if key == "genfib":
        arity(1)
        k = _require_int("k", params[0], 1)
        return RecurrenceSpec((1,) * k, (0,) * (k - 1) + (1,), f"genFib({k})")
    raise ValueError(f"unknown sequence {name!r}")


_CALL = re.compile(r"^\s*([A-Za-z_-]+)\s*(?:\(([^)]*)\))?\s*$")


def parse_sequence(text: str) -> RecurrenceSpec:
    """Parse ``"pell"``, ``"genPell(2,1)"`` or ``"lucasU(3,-1)"``."""
    m = _CALL.match(text)
    if not m:
        raise ValueError(f"cannot parse sequence {text!r}")
    params = m.group(2)
    args = [int(p) for p in params.split(",")] if params and params.strip() else []
    return builtin(m.group(1), *args)


def custom(coeffs: Sequence[int], init: Sequence[int], label: str = "custom") -> RecurrenceSpec:
    return RecurrenceSpec(tuple(coeffs), tuple(init), label)


def term(spec: RecurrenceSpec, n: int) -> int:
    """Exact ``u(n)``; negative ``n`` only when the recurrence is reversible."""
    _require_int("n", n)
    d = spec.order
    if n < 0:
        if not spec.reversible:
            raise ValueError("negative index needs |c_d| = 1")
        return terms(spec, n, 1)[0]
    if n < d:
        return spec.init[n]
    if n > _JUMP:
        return terms(spec, n, 1)[0]
    window = list(spec.init)
    coeffs = spec.coeffs
    for _ in range(n - d + 1):
        nxt = sum(c * window[-1 - j] for j, c in enumerate(coeffs) if c)
        window.append(nxt)
        del window[0]
    return window[-1]


# above this start index ``terms`` uses a matrix power
_JUMP = 4096


def terms(spec: RecurrenceSpec, start: int, count: int) -> list[int]:
    """``[u(start), ..., u(start + count - 1)]`` from a single pass."""
    _require_int("count", count, 0)
    if count == 0:
        return []
    if start < 0:
        if not spec.reversible:
            raise ValueError("negative index needs |c_d| = 1")
        back = _backward(spec, -start)
        vals = back[::-1] + list(spec.init)
        if start + count > spec.order:
            vals += terms(spec, spec.order, start + count - spec.order)
        return vals[:count]
    pairs = [(j, c) for j, c in enumerate(spec.coeffs) if c]
    if start > _JUMP:
        # jump straight to the state at ``start`` instead of walking there
        power = mat_pow(companion_matrix(spec), start)
        state = list(reversed(spec.init))
        vals = [sum(x * y for x, y in zip(row, state)) for row in power][::-1]
        base = start
    else:
        vals = list(spec.init)
        base = 0
    while len(vals) < start - base + count:
        vals.append(sum(c * vals[-1 - j] for j, c in pairs))
    return vals[start - base:start - base + count]


def _backward(spec: RecurrenceSpec, steps: int) -> list[int]:
    """``[u(-1), u(-2), ..., u(-steps)]`` for a reversible spec."""
    d = spec.order
    c = spec.coeffs
    cd = c[-1]
    # window holds u(m), ..., u(m + d - 1) with m the lowest index known
    window = list(spec.init)
    out = []
    for _ in range(steps):
        # u(m + d - 1) = sum_{i=1}^{d} c_i u(m + d - 1 - i)
        top = window[-1]
        rest = sum(c[i - 1] * window[d - 1 - i] for i in range(1, d))
        prev = (top - rest) * cd  # cd is +-1 so division equals multiplication
        window = [prev] + window[:-1]
        out.append(prev)
    return out


class TermTable:
    """Lazily extended table of terms with prefix sums.

    Shared by the identity and relation sweeps so each sequence is generated
    once per sweep.
    """

    def __init__(self, spec: RecurrenceSpec, size: int = 64) -> None:
        self.spec = spec
        self._vals: list[int] = []
        self._prefix: list[int] = [0]
        self._neg: dict[int, int] = {}
        self.extend(size)

    def extend(self, size: int) -> None:
        if size <= len(self._vals):
            return
        new = terms(self.spec, len(self._vals), size - len(self._vals))
        acc = self._prefix[-1]
        for v in new:
            acc += v
            self._prefix.append(acc)
        self._vals.extend(new)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            if n not in self._neg:
                self._neg[n] = term(self.spec, n)
            return self._neg[n]
        if n >= len(self._vals):
            self.extend(max(2 * len(self._vals), n + 1))
        return self._vals[n]

    def window(self, n: int, length: int) -> int:
        """Sum of ``length`` consecutive terms starting at index ``n``."""
        if n < 0:
            return sum(self[i] for i in range(n, n + length))
        self.extend(n + length)
        return self._prefix[n + length] - self._prefix[n]


def window_sum(spec: RecurrenceSpec, n: int, N: int) -> int:
    """Exact ``u(n) + ... + u(n + N - 1)`` by running accumulation."""
    _require_int("N", N, 1)
    return sum(terms(spec, n, N))


def companion_matrix(spec: RecurrenceSpec) -> Matrix:
    d = spec.order
    rows = [list(spec.coeffs)]
    for r in range(1, d):
        rows.append([1 if c == r - 1 else 0 for c in range(d)])
    return rows


def determinant(matrix: Matrix) -> int:
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    a = [row[:] for row in matrix]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def mat_mul(a: Matrix, b: Matrix, mod: int | None = None) -> Matrix:
    cols = list(zip(*b))
    out = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]
    if mod is not None:
        out = [[v % mod for v in row] for row in out]
    return out


def mat_pow(m: Matrix, e: int, mod: int | None = None) -> Matrix:
    d = len(m)
    result = [[int(i == j) for j in range(d)] for i in range(d)]
    base = [row[:] for row in m]
    if mod is not None:
        result = [[v % mod for v in row] for row in result]
        base = [[v % mod for v in row] for row in base]
    while e:
        if e & 1:
            result = mat_mul(result, base, mod)
        e >>= 1
        if e:
            base = mat_mul(base, base, mod)
    return result


def _state_term(spec: RecurrenceSpec, n: int, mod: int | None) -> int:
    d = spec.order
    if n < d:
        return spec.init[n] % mod if mod else spec.init[n]
    # state (u(n+d-1), ..., u(n)) = M^n (u(d-1), ..., u(0))
    power = mat_pow(companion_matrix(spec), n - d + 1, mod)
    state = list(reversed(spec.init))
    top = sum(x * y for x, y in zip(power[0], state))
    return top % mod if mod else top


def term_by_matrix(spec: RecurrenceSpec, n: int) -> int:
    """``u(n)`` by square-and-multiply powers of the companion matrix."""
    _require_int("n", n, 0)
    return _state_term(spec, n, None)


def term_mod(spec: RecurrenceSpec, n: int, m: int) -> int:
    """``u(n) mod m`` using matrix powers reduced modulo ``m``."""
    _require_int("n", n, 0)
    _require_int("m", m, 2)
    return _state_term(spec, n, m)


def support_start(spec: RecurrenceSpec, limit: int) -> int:
    """Smallest ``s`` with ``u(n) != 0`` for every ``s <= n < limit``."""
    vals = terms(spec, 0, limit)
    s = 0
    for n, v in enumerate(vals):
        if v == 0:
            s = n + 1
    return s
