"""Command-line entry point: ``pellsum <subcommand> ...``.

Exit status is 0 when everything checked out, 1 when a verification failed
and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Sequence

from pellsum import __version__, kernels

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_DIGITS = 10**6

_LOG10_2 = math.log10(2)


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _range_arg(text: str) -> range:
    lo, sep, hi = text.partition(":")
    try:
        if not sep:
            return range(int(lo), int(lo) + 1)
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")


def _add_spec(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("sequence")
    g.add_argument("--seq", help="builtin name, e.g. pell, fibonacci, lucasU(3,-1), genPell(2,1)")
    g.add_argument("--coeffs", type=_int_list, help="custom recurrence coefficients c1,...,cd")
    g.add_argument("--init", type=_int_list, help="custom initial values f(0),...,f(d-1)")


def _add_output(p: argparse.ArgumentParser, default: str, choices=("json", "csv", "text")) -> None:
    p.add_argument("--format", choices=choices, default=default)
    p.add_argument("--output", "-o", help="write to this file instead of standard output")


def _spec_from(args: argparse.Namespace):
    from pellsum.sequences import custom, parse_sequence

    if args.coeffs is not None or args.init is not None:
        if args.seq:
            raise UsageError("give either --seq or --coeffs/--init, not both")
        if args.coeffs is None or args.init is None:
            raise UsageError("--coeffs and --init must be given together")
        return custom(args.coeffs, args.init)
    if not args.seq:
        raise UsageError("a sequence is required (--seq or --coeffs/--init)")
    return parse_sequence(args.seq)


def _spec_params(spec) -> dict:
    return {"seq": spec.label, "coeffs": list(spec.coeffs), "init": list(spec.init)}


def envelope(subcommand: str, params: dict, result: Any) -> str:
    doc = {"tool-version": __version__, "subcommand": subcommand, "params": params, "result": result}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _csv(rows: list[dict], fields: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


def _digits(values: Sequence[int]) -> int:
    return sum(int(abs(v).bit_length() * _LOG10_2) + 1 for v in values)


def _estimated_digits(spec, start: int, count: int) -> int:
    """Digits needed to print ``count`` terms from ``start``.

    Far indices are extrapolated from the growth up to a cheap probe index;
    only estimates near the limit are settled by computing the terms.
    """
    from pellsum.sequences import term, terms

    last = start + count - 1
    probe = 4096
    if max(abs(start), abs(last)) <= probe:
        return _digits(terms(spec, start, count))
    per_index = abs(term(spec, probe)).bit_length() / probe * _LOG10_2
    estimate = int(count * max(abs(start), abs(last)) * per_index)
    if abs(estimate - MAX_DIGITS) > MAX_DIGITS // 10:
        return estimate
    return _digits(terms(spec, start, count))


# --- subcommands -------------------------------------------------------
# each returns (text, exit code)


def cmd_gen(args) -> tuple[str, int]:
    from pellsum.sequences import terms

    spec = _spec_from(args)
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    if args.count and not args.force and _estimated_digits(spec, args.start, args.count) > MAX_DIGITS:
        raise UsageError(f"output exceeds {MAX_DIGITS} digits; pass --force to print it")
    vals = terms(spec, args.start, args.count)
    params = dict(_spec_params(spec), start=args.start, count=args.count)
    if args.format == "json":
        return envelope("gen", params, vals), EXIT_OK
    if args.format == "csv":
        rows = [{"n": args.start + i, "value": v} for i, v in enumerate(vals)]
        return _csv(rows, ["n", "value"]), EXIT_OK
    return " ".join(str(v) for v in vals) + "\n", EXIT_OK


def cmd_sum(args) -> tuple[str, int]:
    from pellsum.sequences import TermTable

    spec = _spec_from(args)
    if args.window < 1 or args.count < 1:
        raise UsageError("--window and --count must be positive")
    f = TermTable(spec, args.n + args.count + args.window + 1)
    rows = [{"n": n, "sum": f.window(n, args.window)} for n in range(args.n, args.n + args.count)]
    params = dict(_spec_params(spec), n=args.n, window=args.window, count=args.count)
    if args.format == "json":
        return envelope("sum", params, rows), EXIT_OK
    if args.format == "csv":
        return _csv(rows, ["n", "sum"]), EXIT_OK
    return "".join(f"{r['n']} {r['sum']}\n" for r in rows), EXIT_OK


def cmd_search(args) -> tuple[str, int]:
    from pellsum.relations import search_relation

    spec = _spec_from(args)
    v = search_relation(spec, args.window, args.nmin, args.horizon, offsets=args.offsets)
    params = dict(
        _spec_params(spec),
        window=args.window,
        horizon=args.horizon,
        nmin=v.n_min,
        offsets=[min(args.offsets), max(args.offsets)] if args.offsets else None,
    )
    if args.format == "json":
        return envelope("search", params, v.to_dict()), EXIT_OK
    if args.format == "csv":
        return _csv([v.row()], ["label", "N", "found", "C", "k", "horizon"]), EXIT_OK
    if v.found:
        line = f"{v.label}: window {v.N} sums to {v.C} * f(n+{v.offset}) for {v.n_min} <= n <= {v.horizon}"
    else:
        line = f"{v.label}: no integer relation for window {v.N} ({v.status}, horizon {v.horizon})"
    return line + "\n", EXIT_OK


def cmd_classify(args) -> tuple[str, int]:
    from pellsum.relations import classify, verdicts_to_csv

    spec = _spec_from(args)
    verdicts = classify(spec, args.Nmax, args.nmin, args.horizon)
    params = dict(_spec_params(spec), Nmax=args.Nmax, horizon=args.horizon, nmin=args.nmin)
    if args.format == "json":
        return envelope("classify", params, [v.to_dict() for v in verdicts]), EXIT_OK
    if args.format == "csv":
        return verdicts_to_csv(verdicts), EXIT_OK
    lines = [f"{'N':>4} {'found':>5} {'C':>12} {'k':>4}"]
    for v in verdicts:
        C = "" if v.C is None else str(v.C)
        k = "" if not v.found else str(v.offset)
        lines.append(f"{v.N:>4} {('yes' if v.found else 'no'):>5} {C:>12} {k:>4}")
    lines.append(f"verified up to horizon {args.horizon}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_pisano(args) -> tuple[str, int]:
    from pellsum.pisano import MAX_STATES, parity_certificate, pisano

    spec = _spec_from(args)
    if args.m is not None:
        moduli = range(args.m, args.m + 1)
    elif args.mmin is not None and args.mmax is not None:
        moduli = range(args.mmin, args.mmax + 1)
    else:
        raise UsageError("give --m or both --mmin and --mmax")
    if moduli.start < 1:
        raise UsageError("moduli must be positive")
    if moduli and moduli[-1] ** spec.order > MAX_STATES:
        raise UsageError(
            f"state space m^d = {moduli[-1]}^{spec.order} exceeds {MAX_STATES}; use a smaller modulus"
        )
    rows = []
    for m in moduli:
        r = pisano(spec, m)
        row = {
            "m": m,
            "preperiod": r.preperiod,
            "period": r.period,
            "parity": "even" if r.period % 2 == 0 else "odd",
        }
        if args.certificate and m > 1 and math.gcd(spec.coeffs[-1], m) == 1:
            row["certificate"] = parity_certificate(spec, m).to_dict()
        rows.append(row)
    if args.format == "json":
        params = dict(_spec_params(spec), moduli=[moduli.start, moduli[-1]] if moduli else [])
        return envelope("pisano", params, rows), EXIT_OK
    if args.format == "jsonl":
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows), EXIT_OK
    if args.format == "csv":
        return _csv(rows, ["m", "preperiod", "period", "parity"]), EXIT_OK
    return "".join(f"{r['m']} {r['preperiod']} {r['period']} {r['parity']}\n" for r in rows), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    from pellsum.identities import VERIFIERS, verify

    ids = sorted(VERIFIERS) if args.id == "all" else [args.id]
    if args.id != "all" and args.id not in VERIFIERS:
        raise UsageError(f"unknown identity {args.id!r}; choose from all, {', '.join(sorted(VERIFIERS))}")
    reports = [verify(i, args.nmax, args.Nmax, args.kmax, args.rmax) for i in ids]
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    params = {"id": args.id, "nmax": args.nmax, "Nmax": args.Nmax, "kmax": args.kmax, "rmax": args.rmax}
    if args.format == "json":
        return envelope("verify", params, [r.to_dict() for r in reports]), code
    if args.format == "csv":
        rows = [
            {
                "identity": r.identity,
                "passed": r.passed,
                "checked": r.checked,
                "counterexample": json.dumps(r.counterexample, sort_keys=True) if r.counterexample else "",
            }
            for r in reports
        ]
        return _csv(rows, ["identity", "passed", "checked", "counterexample"]), code
    lines = []
    for r in reports:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.identity}: {r.checked} checks")
        if r.counterexample:
            lines.append(f"  counterexample: {json.dumps(r.counterexample, sort_keys=True)}")
    return "\n".join(lines) + "\n", code


def cmd_tilings(args) -> tuple[str, int]:
    from pellsum.tilings import (
        TilingConfig,
        block_sum_check,
        count_dp,
        enumerate_count,
        format_tiling,
        partial_sum_from_blocks,
        tilings,
    )

    params = {"mode": args.mode, "k": args.k, "n": args.n, "a": args.a, "b": args.b}
    if args.mode in ("blocksum", "partial-sum"):
        params = {"mode": args.mode, "k": args.k, "nmax": args.nmax, "a": args.a, "b": args.b}
        if args.mode == "blocksum":
            rep = block_sum_check(args.k, args.nmax, args.a, args.b)
        else:
            if (args.a, args.b) != (2, 1):
                raise UsageError("partial-sum uses the plain weights a=2, b=1")
            rep = partial_sum_from_blocks(args.k, args.nmax)
        code = EXIT_OK if rep.passed else EXIT_FAIL
        if args.format == "json":
            return envelope("tilings", params, rep.to_dict()), code
        text = f"{'PASS' if rep.passed else 'FAIL'} {rep.identity}: {rep.checked} checks\n"
        if rep.counterexample:
            text += f"  counterexample: {json.dumps(rep.counterexample, sort_keys=True)}\n"
        return text, code

    if args.n is None:
        raise UsageError("--n is required for count and enumerate")
    cfg = TilingConfig(args.k, args.n, args.a, args.b)
    if args.mode == "count":
        result: dict[str, Any] = {"count": count_dp(cfg)}
    else:
        result = {"count": enumerate_count(cfg), "dp": count_dp(cfg)}
        if args.list:
            result["tilings"] = [format_tiling(t, cfg) for t in tilings(cfg)]
    code = EXIT_OK if result.get("dp", result["count"]) == result["count"] else EXIT_FAIL
    if args.format == "json":
        return envelope("tilings", params, result), code
    if args.list and "tilings" in result:
        return "".join(t + "\n" for t in result["tilings"]), code
    return f"{result['count']}\n", code


def cmd_conjecture(args) -> tuple[str, int]:
    from pellsum.higher_order import conjecture_scan

    ks = range(args.k, args.k + 1) if args.k is not None else range(args.kmin, args.kmax + 1)
    if ks.start < 2:
        raise UsageError("k must be at least 2")
    scans = []
    for k in ks:
        i_values = [args.i] if args.i is not None else list(range(k))
        N_max = args.Nmax if args.Nmax is not None else 2 * k + 8
        for i in i_values:
            scans.append(conjecture_scan(k, i, N_max, args.horizon))
    code = EXIT_OK if all(s.matches_conjecture for s in scans) else EXIT_FAIL
    params = {
        "k": [ks.start, ks[-1]],
        "i": args.i,
        "Nmax": args.Nmax,
        "horizon": args.horizon,
    }
    if args.format == "json":
        return envelope("conjecture", params, [s.to_dict() for s in scans]), code
    if args.format == "csv":
        rows = [
            {"k": s.k, "i": s.i, "N": N, "C": C, "offset": off}
            for s in scans
            for N, C, off in s.found_windows
        ]
        return _csv(rows, ["k", "i", "N", "C", "offset"]), code
    # k-by-N grid, '#' where a relation was found
    width = max(s.N_range[1] for s in scans)
    header = "k,i   " + "".join(f"{N:>3}" for N in range(2, width + 1))
    lines = [header]
    for s in scans:
        hits = {N for N, _, _ in s.found_windows}
        cells = "".join(
            f"{'#' if N in hits else ('.' if N <= s.N_range[1] else ' '):>3}" for N in range(2, width + 1)
        )
        lines.append(f"{s.k},{s.i:<4}{cells}")
    lines.append(f"'#' = relation found (verified up to horizon {args.horizon})")
    return "\n".join(lines) + "\n", code


def cmd_accept(args) -> tuple[str, int]:
    from pellsum.acceptance import run_all

    out: list[str] = []
    rows = run_all(out.append if args.format == "text" else None)
    code = EXIT_OK if all(r["passed"] for r in rows) else EXIT_FAIL
    if args.format == "json":
        return envelope("accept", {"backend": kernels.BACKEND}, rows), code
    out.append(f"{sum(r['passed'] for r in rows)}/{len(rows)} criteria passed (kernels: {kernels.BACKEND})")
    return "\n".join(out) + "\n", code


# --- parser ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pellsum",
        description="Exact sums of consecutive terms of linear recurrences.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="SUBCOMMAND")
    sub.required = True

    p = sub.add_parser("gen", help="print terms")
    _add_spec(p)
    p.add_argument("--from", dest="start", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--force", action="store_true", help=f"allow more than {MAX_DIGITS} digits")
    _add_output(p, "text")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sum", help="window sums f(n)+...+f(n+N-1)")
    _add_spec(p)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--window", "-N", type=int, required=True)
    p.add_argument("--count", type=int, default=1, help="number of starting indices")
    _add_output(p, "text")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("search", help="search one window length for sum = C f(n+k)")
    _add_spec(p)
    p.add_argument("--window", "-N", type=int, required=True)
    p.add_argument("--horizon", type=int, default=200)
    p.add_argument("--nmin", type=int)
    p.add_argument("--offsets", type=_range_arg, help="offset range LO:HI (default 0:N+2)")
    _add_output(p, "json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("classify", help="search window lengths 1..Nmax")
    _add_spec(p)
    p.add_argument("--Nmax", type=int, default=16)
    p.add_argument("--horizon", type=int, default=200)
    p.add_argument("--nmin", type=int)
    _add_output(p, "text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("pisano", help="periods modulo m")
    _add_spec(p)
    p.add_argument("--m", type=int)
    p.add_argument("--mmin", type=int)
    p.add_argument("--mmax", type=int)
    p.add_argument("--certificate", action="store_true", help="attach the determinant parity argument")
    _add_output(p, "jsonl", choices=("jsonl", "json", "csv", "text"))
    p.set_defaults(func=cmd_pisano)

    p = sub.add_parser("verify", help="run an identity sweep")
    p.add_argument("--id", required=True, help="identity id or 'all'")
    p.add_argument("--nmax", type=int, default=100)
    p.add_argument("--Nmax", type=int, default=10)
    p.add_argument("--kmax", type=int, default=10)
    p.add_argument("--rmax", type=int, default=6)
    _add_output(p, "json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tilings", help="board tilings by squares and (k+1)-ominoes")
    p.add_argument("mode", choices=("count", "enumerate", "blocksum", "partial-sum"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--nmax", type=int, default=120)
    p.add_argument("--list", action="store_true", help="print every tiling, one per line")
    _add_output(p, "text", choices=("json", "text"))
    p.set_defaults(func=cmd_tilings)

    p = sub.add_parser("conjecture", help="window scans on generalized Pell (k, i)")
    p.add_argument("--k", type=int)
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--i", type=int, help="default: every i in 0..k-1")
    p.add_argument("--Nmax", type=int, help="default 2k+8")
    p.add_argument("--horizon", type=int, default=200)
    _add_output(p, "text")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("accept", help="run the full acceptance sweep")
    _add_output(p, "text", choices=("json", "text"))
    p.set_defaults(func=cmd_accept)

    return parser


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    try:
        text, code = args.func(args)
    except (UsageError, ValueError, TypeError, OverflowError) as exc:
        parser.print_usage(sys.stderr)
        print(f"pellsum {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write(text, args.output)
    if code == EXIT_FAIL:
        print(f"pellsum {args.command}: verification failed", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
