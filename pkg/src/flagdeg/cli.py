"""
Command-line surface: sweep tables, single-permutation checks, Richardson
verification, and the Schubert-divisor classification.

Exit codes: 0 success (check: monomial-free), 1 monomial found or failed
verification, 2 bad parameters, 3 rank/time budget exceeded, 4 output
failure, 5 divisor classification disagreeing with the scan.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from . import criteria, richardson, schubert
from .symgroup import compose, longest_element, parse_perm, simple

EXIT_OK = 0
EXIT_FOUND = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_IO = 4
EXIT_MISMATCH = 5


def _mark(flag: bool) -> str:
    return "x" if flag else "-"


def _bracketed(row: schubert.SweepRow) -> str:
    return "[" + ", ".join(str(x) for x in row.v) + "]"


def render_markdown(rows: list[schubert.SweepRow]) -> str:
    header = "| w one-line | w red. word | mono | (1) | (2) | (3) | (4) | (5) | (6) | (7) |"
    rule = "|---|---|---|---|---|---|---|---|---|---|"
    lines = [header, rule]
    for row in rows:
        cells = [_bracketed(row), row.word, _mark(row.mono)]
        cells += [_mark(f) for f in row.flags]
        lines.append("| " + " | ".join(cells) + " |")
    totals = [str(len(rows)), "", str(schubert.mono_count(rows))]
    totals += [str(t) for t in schubert.flag_totals(rows)]
    lines.append("| " + " | ".join(totals) + " |")
    return "\n".join(lines) + "\n"


def render_csv(rows: list[schubert.SweepRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["one_line", "word", "mono"] + [f"c{i}" for i in range(1, 8)])
    for row in rows:
        writer.writerow(
            [row.one_line, row.word, str(row.mono).lower()]
            + [str(f).lower() for f in row.flags]
        )
    writer.writerow(
        ["total", "", schubert.mono_count(rows)]
        + [str(t) for t in schubert.flag_totals(rows)]
    )
    return buffer.getvalue()


def render_json(n: int, rows: list[schubert.SweepRow]) -> str:
    payload = {
        "n": n,
        "rows": [
            {
                "one_line": row.one_line,
                "word": row.word,
                "mono": row.mono,
                "flags": {str(i + 1): f for i, f in enumerate(row.flags)},
                "thm41": row.thm41,
                "guarantee": row.guarantee,
            }
            for row in rows
        ],
        "totals": {
            "count": len(rows),
            "mono": schubert.mono_count(rows),
            "criteria": list(schubert.flag_totals(rows)),
        },
    }
    return json.dumps(payload, indent=2) + "\n"


def _emit(text: str) -> int:
    try:
        sys.stdout.write(text)
        sys.stdout.flush()
    except OSError as exc:
        print(f"error: could not write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _jobs(args: argparse.Namespace) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("FLAGDEG_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def cmd_table(args: argparse.Namespace) -> int:
    restrict_k = 1 if args.k_mode == "k1" else None
    try:
        rows = schubert.sweep(
            args.n,
            restrict_k=restrict_k,
            jobs=_jobs(args),
            budget_seconds=args.budget,
        )
    except schubert.ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "md":
        return _emit(render_markdown(rows))
    if args.format == "csv":
        return _emit(render_csv(rows))
    return _emit(render_json(args.n, rows))


def cmd_check(args: argparse.Namespace) -> int:
    text = args.perm_flag if args.perm_flag is not None else args.perm
    if text is None:
        print("error: provide a permutation (positional or --perm)", file=sys.stderr)
        return EXIT_USAGE
    try:
        w = parse_perm(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    restrict_k = 1 if args.k_mode == "k1" else None
    report = criteria.criteria_report(w, restrict_k=restrict_k)
    code = _emit(json.dumps(report, indent=2) + "\n")
    if code != EXIT_OK:
        return code
    return EXIT_FOUND if report["mono"] else EXIT_OK


def cmd_richardson(args: argparse.Namespace) -> int:
    try:
        if args.kind == "lemma53":
            if args.n is None or args.m is None:
                raise ValueError("lemma53 requires --n and --m")
            pair = richardson.chain_pair(args.n, args.m)
        else:
            if args.i is None:
                raise ValueError("prop55 requires --i")
            pair = richardson.middle_divisor_pair(args.i)
        report = richardson.pair_report(pair)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report["kind"] = args.kind
    code = _emit(json.dumps(report, indent=2) + "\n")
    if code != EXIT_OK:
        return code
    return EXIT_OK if report["verified"] else EXIT_FOUND


def cmd_divisors(args: argparse.Namespace) -> int:
    try:
        verdicts = criteria.divisor_classification(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    n = args.n
    checked = n <= 5
    mismatch = False
    records = []
    for verdict in verdicts:
        record = {
            "i": verdict.i,
            "verdict": "reducible" if verdict.reducible else "irreducible",
            "case": verdict.case,
            "criterion": verdict.criterion,
        }
        if checked:
            w = compose(longest_element(n), simple(n, verdict.i))
            found = schubert.has_monomial(schubert.SchubertContext(w))
            record["scan_agrees"] = found == verdict.reducible
            mismatch = mismatch or not record["scan_agrees"]
        records.append(record)
    if args.format == "json":
        text = json.dumps({"n": n, "divisors": records}, indent=2) + "\n"
    else:
        lines = []
        for record in records:
            line = f"i={record['i']}: {record['verdict']}"
            if record["case"] is not None:
                line += f" (case {record['case']}, criterion ({record['criterion']}))"
            if checked:
                line += " [scan ok]" if record["scan_agrees"] else " [scan MISMATCH]"
            lines.append(line)
        text = "\n".join(lines) + "\n"
    code = _emit(text)
    if code != EXIT_OK:
        return code
    return EXIT_MISMATCH if mismatch else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagdeg",
        description="Degenerate Plucker relations on Schubert varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="full S_n sweep table")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--format", choices=("md", "csv", "json"), default="md")
    table.add_argument("--k-mode", dest="k_mode", choices=("all", "k1"), default="all")
    table.add_argument("--jobs", type=int, default=None, help="workers (default FLAGDEG_JOBS or 1)")
    table.add_argument("--budget", type=float, default=None, help="wall-clock seconds; required for n=6")
    table.set_defaults(func=cmd_table)

    check = sub.add_parser("check", help="report for a single permutation")
    check.add_argument("perm", nargs="?", help="one-line notation, e.g. 2,3,1")
    check.add_argument("--perm", dest="perm_flag", default=None)
    check.add_argument("--k-mode", dest="k_mode", choices=("all", "k1"), default="all")
    check.set_defaults(func=cmd_check)

    rich = sub.add_parser("richardson", help="verify a Richardson correspondence")
    rich.add_argument("kind", choices=("lemma53", "prop55"))
    rich.add_argument("--n", type=int, default=None)
    rich.add_argument("--m", type=int, default=None)
    rich.add_argument("--i", type=int, default=None)
    rich.set_defaults(func=cmd_richardson)

    div = sub.add_parser("divisors", help="classify Schubert divisors")
    div.add_argument("--n", type=int, required=True)
    div.add_argument("--format", choices=("md", "json"), default="md")
    div.set_defaults(func=cmd_divisors)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
