"""Acceptance sweep: every criterion as an exact, finite check.

Each criterion function returns ``(passed, detail)``.  All comparisons are
exact integer (or exact field element) equalities.  Statements about "no
relation" are verified up to the stated horizon only.
"""

from __future__ import annotations

import time
from typing import Callable

from pellsum.higher_order import (
    conjecture_scan,
    gen_fib_checks,
    gen_fib_odd_window_scan,
    gen_pell_sum_check,
)
from pellsum.identities import verify_lucas_converse, verify_pell_sum_4n
from pellsum.pisano import pisano
from pellsum.quadratic import binet_term, phi_power
from pellsum.relations import (
    analytic_check,
    classify,
    offset_in_band,
    scan_r4,
)
from pellsum.sequences import TermTable, builtin, terms
from pellsum.tilings import TilingConfig, block_sum_check, count_dp, enumerate_count

Result = tuple[bool, str]

_cache: dict[str, object] = {}


def _cached(key: str, fn: Callable[[], object]):
    if key not in _cache:
        _cache[key] = fn()
    return _cache[key]


def _pell_table():
    return _cached("pell-classify", lambda: classify(builtin("pell"), 16, horizon=200))


def _fib_table():
    return _cached("fib-classify", lambda: classify(builtin("fibonacci"), 16, horizon=200))


def _r4_table():
    return _cached("r4", lambda: scan_r4(10, horizon=150))


def _conjecture_scans():
    return _cached(
        "conjecture",
        lambda: [conjecture_scan(k, i, 2 * k + 8, 200) for k in (2, 3, 4, 5) for i in range(k)],
    )


def criterion_1() -> Result:
    rep = verify_pell_sum_4n(100, 10)
    return rep.passed, f"{rep.checked} exact checks, counterexample={rep.counterexample}"


def criterion_2() -> Result:
    P = TermTable(builtin("pell"), 32)
    found = {v.N: (v.C, v.offset) for v in _pell_table() if v.found}
    expected = {1: (1, 0)}
    expected.update({N: (2 * P[N // 2], N // 2) for N in (4, 8, 12, 16)})
    return found == expected, f"found {found}"


def criterion_3() -> Result:
    L = TermTable(builtin("lucas"), 32)
    found = {v.N: (v.C, v.offset) for v in _fib_table() if v.found}
    ok = set(found) == {1, 2, 3, 6, 10, 14}
    ok = ok and all(found[N][0] == L[N // 2] for N in (2, 6, 10, 14))
    ok = ok and found.get(3, (None,))[0] == 2
    return ok, f"found {found}"


def criterion_4() -> Result:
    hits = [(v.label, v.C, v.offset) for v in _r4_table() if v.found]
    return hits == [("lucasU(2,1)", 4, 2)], f"window-4 relations: {hits}"


def criterion_5() -> Result:
    relations = []
    for v in list(_pell_table()) + list(_fib_table()) + list(_r4_table()):
        if v.found:
            relations.append((v.label, v.N, v.offset))
    for scan in _conjecture_scans():
        for N, _, k in scan.found_windows:
            relations.append((f"genPell({scan.k},{scan.i})", N, k))
    # the length-1 window is the identity relation with offset 0
    trivial = [r for r in relations if r[1] == 1]
    bad = [r for r in relations if r[1] >= 2 and not offset_in_band(r[1], r[2])]
    ok = not bad and all(k == 0 for _, _, k in trivial)
    return ok, (
        f"{len(relations) - len(trivial)} relations with N>=2 all in [ceil(N/2), N]; "
        f"{len(trivial)} trivial N=1 relations at offset 0; out of band: {bad}"
    )


def criterion_6() -> Result:
    pairs = [((2, 1), _pell_table()), ((1, 1), _fib_table())]
    pairs.append(((2, 1), [v for v in _r4_table() if v.found]))
    mismatches = []
    count = 0
    for (r, s), verdicts in pairs:
        for v in verdicts:
            if not v.found:
                continue
            a = analytic_check(r, s, v.N, v.offset)
            count += 1
            if a.kind != "integer" or a.C != v.C:
                mismatches.append((r, s, v.N, v.offset, str(a.value)))
    pell6 = {k: analytic_check(2, 1, 6, k) for k in range(3, 7)}
    irr = all(a.kind == "irrational" and a.value.y != 0 for a in pell6.values())
    return not mismatches and irr, (
        f"{count} found relations agree with the closed form; "
        f"Pell N=6 offsets 3..6 irrational: {irr}; mismatches={mismatches}"
    )


def criterion_7() -> Result:
    pell = builtin("pell")
    odd = [m for m in range(3, 1001) if pisano(pell, m).period % 2]
    small = (pisano(pell, 1).period, pisano(pell, 2).period)
    return not odd and small == (1, 2), f"pi(1), pi(2) = {small}; odd periods for m in 3..1000: {odd}"


def criterion_8() -> Result:
    bad = []
    for k in range(1, 7):
        for i in range(k):
            rep = gen_pell_sum_check(k, i, 150)
            if not rep.passed:
                bad.append((k, i, rep.counterexample))
    scans = _conjecture_scans()
    wrong = [(s.k, s.i, s.found_windows) for s in scans if not s.matches_conjecture]
    return not bad and not wrong, (
        f"sum identity failures={bad}; conjecture scans (k=2..5, all i) "
        f"off-pattern={wrong}"
    )


def criterion_9() -> Result:
    bad = []
    for k in range(1, 7):
        vals = terms(builtin("genPell", k, k - 1), 0, 2 * k + 4)
        for i in range(1, k + 1):
            if vals[k + i] != 2**i:
                bad.append((k, f"P({k}+{i})", vals[k + i]))
        if k in (2, 4, 6):
            closed = (2 ** (k + 1) + 1, 2 ** (k + 2) + 4, 2 ** (k + 3) + 12)
            got = tuple(vals[2 * k + 1: 2 * k + 4])
            if got != closed:
                bad.append((k, "early", got, closed))
    return not bad, f"mismatches={bad}"


def criterion_10() -> Result:
    try:
        rep = verify_lucas_converse(80, 8, s_minus_one_r=(1, 3, 4))
    except ArithmeticError as exc:  # a non-integer coefficient
        return False, str(exc)
    return rep.passed, f"{rep.checked} exact checks, counterexample={rep.counterexample}"


def criterion_11() -> Result:
    problems = []
    for k in range(1, 4):
        for n in range(0, 15):
            cfg = TilingConfig(k, n, 2, 1)
            if enumerate_count(cfg) != count_dp(cfg):
                problems.append(("enumerate", k, n))
    for k in range(1, 6):
        P = terms(builtin("genPell", k, k - 1), 0, 200 + k + 1)
        for n in range(0, 201):
            if count_dp(TilingConfig(k, n, 2, 1)) != P[n + k]:
                problems.append(("shift", k, n))
                break
    for k in range(1, 5):
        for a, b in ((2, 1), (3, 1), (3, 2)):
            rep = block_sum_check(k, 120, a, b)
            if not rep.passed:
                problems.append(("block", k, a, b, rep.counterexample))
    return not problems, f"problems={problems}"


def criterion_12() -> Result:
    problems = []
    for k in (2, 3, 4):
        rep = gen_fib_checks(k, 150)
        if not rep.passed:
            problems.append(("growth", k, rep.counterexample))
    for k in (2, 4):
        scan = gen_fib_odd_window_scan(k, 21, 200)
        if not scan["passed"]:
            problems.append(("odd-window", k, scan["hits"]))
    return not problems, f"problems={problems}"


def criterion_13() -> Result:
    problems = []
    cases = [
        ("pell", 2, 1, "first"),
        ("fibonacci", 1, 1, "first"),
        ("pellLucas", 2, 1, "second"),
        ("lucas", 1, 1, "second"),
    ]
    for name, r, s, kind in cases:
        vals = terms(builtin(name), 0, 201)
        for n in range(201):
            if binet_term(r, s, kind, n) != vals[n]:
                problems.append((name, n))
                break
    try:
        for n in range(1, 301):
            phi_power(n)
    except ArithmeticError as exc:
        problems.append(("phi", str(exc)))
    return not problems, f"problems={problems}"


CRITERIA: list[tuple[int, str, Callable[[], Result]]] = [
    (1, "Pell 4N window identity", criterion_1),
    (2, "Pell classification", criterion_2),
    (3, "Fibonacci classification", criterion_3),
    (4, "window-4 only at r=2", criterion_4),
    (5, "offset band", criterion_5),
    (6, "closed-form constant agreement", criterion_6),
    (7, "Pell Pisano parity", criterion_7),
    (8, "generalized Pell 2k+2 sums and scans", criterion_8),
    (9, "early-term closed forms", criterion_9),
    (10, "Lucas-family converse identities", criterion_10),
    (11, "tilings", criterion_11),
    (12, "order-k Fibonacci", criterion_12),
    (13, "Binet agreement and phi powers", criterion_13),
]


def run_all(echo: Callable[[str], None] | None = print) -> list[dict]:
    _cache.clear()
    rows = []
    for number, title, fn in CRITERIA:
        start = time.perf_counter()
        passed, detail = fn()
        elapsed = time.perf_counter() - start
        rows.append({"criterion": number, "title": title, "passed": passed, "detail": detail})
        if echo is not None:
            echo(f"[{'PASS' if passed else 'FAIL'}] {number:2d} {title} ({elapsed:.2f}s): {detail}")
    return rows
