"""Search for window relations ``sum_{i<N} f(n+i) = C * f(n+k)``.

A relation is reported only if one offset ``k`` gives the same exact ratio
at every ``n`` of the sweep; the ratio must then be a nonzero integer.
A finite sweep is evidence, not proof, and verdicts say so.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable

from pellsum.quadratic import QuadRat, closed_form_constant
from pellsum.sequences import RecurrenceSpec, TermTable, builtin, support_start

DEFAULT_HORIZON = 200


@dataclass
class RelationVerdict:
    label: str
    N: int
    found: bool
    C: int | None = None
    offset: int | None = None
    n_min: int = 0
    horizon: int = DEFAULT_HORIZON
    # one entry per offset that failed: {"offset", "n", "ratio"} or a reason
    witnesses: list[dict] = field(default_factory=list)
    # constant ratio that is not an integer, as "p/q"
    rational_constant: str | None = None
    matches: list[tuple[int, int]] = field(default_factory=list)
    status: str = "verified up to horizon"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["matches"] = [list(m) for m in self.matches]
        return d

    def row(self) -> dict:
        return {
            "label": self.label,
            "N": self.N,
            "found": self.found,
            "C": self.C,
            "k": self.offset,
            "horizon": self.horizon,
        }


def default_n_min(spec: RecurrenceSpec, N: int, horizon: int) -> int:
    """First index from which every probed term is nonzero."""
    return support_start(spec, horizon + N + 3)


def search_relation(
    spec: RecurrenceSpec,
    N: int,
    n_min: int | None = None,
    horizon: int = DEFAULT_HORIZON,
    offsets: Iterable[int] | None = None,
    table: TermTable | None = None,
) -> RelationVerdict:
    """Look for ``(C, k)`` with the window sum equal to ``C * f(n+k)`` on the sweep.

    Offsets default to ``0..N+2``; the bound ``ceil(N/2) <= k <= N`` is a
    property to check afterwards, not a restriction of the search.
    """
    if N < 1:
        raise ValueError("window length must be positive")
    if offsets is None:
        offsets = range(0, N + 3)
    offsets = list(offsets)
    support = default_n_min(spec, N, horizon + max(offsets, default=0))
    if n_min is None:
        n_min = support
    if horizon < n_min + 3:
        raise ValueError(f"horizon {horizon} must be at least n_min + 3 = {n_min + 3}")
    f = table if table is not None else TermTable(spec, horizon + N + max(offsets) + 2)
    verdict = RelationVerdict(spec.label, N, False, n_min=n_min, horizon=horizon)

    rationals: list[tuple[int, Fraction]] = []
    for k in offsets:
        ratio: Fraction | None = None
        failure: dict | None = None
        for n in range(n_min, horizon + 1):
            t = f[n + k]
            if t == 0:
                if n + k < support:
                    continue
                failure = {"offset": k, "n": n, "reason": "zero term"}
                break
            s = f.window(n, N)
            if s == 0:
                failure = {"offset": k, "n": n, "reason": "unsupported index range"}
                break
            if ratio is None:
                ratio = Fraction(s, t)
            elif s * ratio.denominator != ratio.numerator * t:
                failure = {"offset": k, "n": n, "ratio": str(Fraction(s, t)), "first": str(ratio)}
                break
        if failure is None and ratio is None:
            failure = {"offset": k, "reason": "no usable index"}
        if failure is not None:
            verdict.witnesses.append(failure)
            continue
        assert ratio is not None
        if ratio.denominator == 1:
            verdict.matches.append((int(ratio), k))
        else:
            rationals.append((k, ratio))

    if verdict.matches:
        verdict.found = True
        verdict.C, verdict.offset = verdict.matches[0]
    elif rationals:
        k, ratio = rationals[0]
        verdict.rational_constant = f"{ratio.numerator}/{ratio.denominator}"
        verdict.offset = k
        verdict.status = "constant non-integer ratio"
    return verdict


def classify(
    spec: RecurrenceSpec,
    N_max: int,
    n_min: int | None = None,
    horizon: int = DEFAULT_HORIZON,
    N_min: int = 1,
) -> list[RelationVerdict]:
    table = TermTable(spec, horizon + 2 * N_max + 8)
    return [
        search_relation(spec, N, n_min, horizon, table=table)
        for N in range(N_min, N_max + 1)
    ]


def offset_in_band(N: int, k: int) -> bool:
    """``ceil(N/2) <= k <= N``, the admissible offsets for a window of ``N``."""
    return math.ceil(N / 2) <= k <= N


@dataclass(frozen=True)
class AnalyticVerdict:
    kind: str  # "integer", "irrational" or "non-integer-rational"
    value: QuadRat

    @property
    def C(self) -> int | None:
        return int(self.value.x) if self.kind == "integer" else None

    def to_dict(self) -> dict:
        return {"kind": self.kind, "value": str(self.value)}


def analytic_check(r: int, s: int, N: int, k: int) -> AnalyticVerdict:
    """Classify ``sum_{i<N} alpha^(i-k)`` for the dominant root of ``X^2 - rX - s``."""
    value = closed_form_constant(r, s, N, k)
    if not value.is_rational():
        kind = "irrational"
    elif value.is_integer():
        kind = "integer"
    else:
        kind = "non-integer-rational"
    return AnalyticVerdict(kind, value)


def scan_r4(r_max: int, n_min: int | None = None, horizon: int = 150) -> list[RelationVerdict]:
    """Window-4 search over ``f(n) = r f(n-1) + f(n-2)``, ``f(0)=0, f(1)=1``."""
    return [
        search_relation(builtin("lucasU", r, 1), 4, n_min, horizon)
        for r in range(1, r_max + 1)
    ]


def _degenerate(r: int, s: int) -> str | None:
    delta = r * r + 4 * s
    if delta == 0:
        return "double root"
    # alpha/beta is a root of unity exactly when r^2 / s is 0, 1, 2 or 3
    if s != 0 and (r * r) % s == 0 and -(r * r) // s in (0, 1, 2, 3):
        return "alpha/beta is a root of unity"
    return None


def lucas_family_scan(
    r_values: Iterable[int],
    s_values: Iterable[int] = (-1, 1),
    window_max: int = 12,
    horizon: int = DEFAULT_HORIZON,
    kind: str = "first",
) -> list[dict]:
    """Window searches (lengths ``2..window_max``) across Lucas sequences."""
    name = {"first": "lucasU", "second": "lucasV"}[kind]
    rows = []
    for s in s_values:
        for r in r_values:
            if r == 0:
                continue
            why = _degenerate(r, s)
            if why is not None:
                rows.append({"r": r, "s": s, "skipped": why, "found": []})
                continue
            spec = builtin(name, r, s)
            verdicts = classify(spec, window_max, horizon=horizon, N_min=2)
            rows.append(
                {
                    "r": r,
                    "s": s,
                    "skipped": None,
                    "found": [(v.N, v.C, v.offset) for v in verdicts if v.found],
                }
            )
    return rows


def verdicts_to_csv(verdicts: Iterable[RelationVerdict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=["label", "N", "found", "C", "k", "horizon"], lineterminator="\n"
    )
    writer.writeheader()
    for v in verdicts:
        writer.writerow(v.row())
    return buf.getvalue()
