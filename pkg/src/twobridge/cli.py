"""Command-line front end: ``twobridge enumerate|word|stats|verify``.

Exit codes: 0 success, 1 a verification identity failed, 2 bad usage or
an invalid word.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Sequence

from twobridge import config
from twobridge.diagram import diagram_to_dict, run_positions, to_alternating
from twobridge.seifert import genus_from_circles, orient_fast, seifert_circles
from twobridge.stats import CSV_COLUMNS, RangeError, aggregate, verify_all
from twobridge.words import (
    RunWord,
    WordError,
    classify_case,
    enumerate_palindromic,
    enumerate_words,
    format_runs,
    is_palindromic_type,
    parse_word,
    to_symbols,
)

RECORD_FIELDS = ["word", "runs", "c", "length", "s", "genus", "case", "palindromic"]


class UsageError(Exception):
    pass


def word_record(w: RunWord, detail: bool = False) -> dict:
    d = to_alternating(w)
    orientations = orient_fast(w, d)
    s = seifert_circles(d, orientations).circles
    rec = {
        "word": to_symbols(w),
        "runs": format_runs(w),
        "c": w.c,
        "length": w.length,
        "s": s,
        "genus": genus_from_circles(w.c, s),
        "case": int(classify_case(w)) if w.c >= 5 else None,
        "palindromic": is_palindromic_type(w),
    }
    if detail:
        rec["run_positions"] = [list(p) for p in run_positions(w)]
        rec["generators"] = diagram_to_dict(d)["generators"]
        rec["right_closure"] = d.right_closure
        rec["orientations"] = [o.value for o in orientations]
    return rec


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _write_csv(out, header: Sequence[str], rows) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def cmd_enumerate(args, out) -> int:
    if args.c < 3:
        raise UsageError(f"-c must be >= 3, got {args.c}")
    cap = args.cap if args.cap is not None else (config.PALINDROMIC_CAP if args.palindromic else config.FULL_ENUMERATION_CAP)
    if args.c > cap:
        raise UsageError(f"-c {args.c} exceeds the cap {cap}; pass --cap to raise it")
    words = enumerate_palindromic(args.c) if args.palindromic else enumerate_words(args.c)
    records = [word_record(w) for w in words]
    if args.format == "json":
        json.dump(records, out, indent=2)
        out.write("\n")
    else:
        _write_csv(out, RECORD_FIELDS, ([_csv_value(r[k]) for k in RECORD_FIELDS] for r in records))
    return 0


def cmd_word(args, out) -> int:
    try:
        w = parse_word(args.word)
    except WordError as exc:
        raise UsageError(f"invalid word {args.word!r}: {exc}") from None
    rec = word_record(w, detail=True)
    if args.format == "json":
        json.dump(rec, out, indent=2)
        out.write("\n")
    else:
        for k, v in rec.items():
            if isinstance(v, list):
                v = " ".join(map(str, v)) if not v or not isinstance(v[0], list) else " ".join(f"({a},{b})" for a, b in v)
            out.write(f"{k:>14}: {_csv_value(v) or '-'}\n")
    return 0


def _check_range(lo: int, hi: int, cap: int) -> None:
    if not 3 <= lo <= hi:
        raise UsageError(f"need 3 <= --min <= --max, got {lo}..{hi}")
    if hi > cap:
        raise UsageError(f"--max {hi} exceeds the cap {cap}; pass --cap to raise it")


def cmd_stats(args, out) -> int:
    cap = args.cap if args.cap is not None else config.FULL_ENUMERATION_CAP
    _check_range(args.min, args.max, cap)
    rows = [aggregate(c, workers=args.workers, cap=cap) for c in range(args.min, args.max + 1)]
    if args.format == "json":
        payload = [r.as_dict() for r in rows]
        json.dump(payload[0] if len(payload) == 1 else payload, out, indent=2)
        out.write("\n")
    elif args.format == "table":
        header = CSV_COLUMNS + ["avg_genus~"]
        body = [r.csv_row() + [f"{float(r.avg_genus):.6f}"] for r in rows]
        widths = [max(len(h), *(len(b[i]) for b in body)) for i, h in enumerate(header)]
        out.write("  ".join(h.rjust(wd) for h, wd in zip(header, widths)) + "\n")
        for b in body:
            out.write("  ".join(x.rjust(wd) for x, wd in zip(b, widths)) + "\n")
    else:
        _write_csv(out, CSV_COLUMNS, (r.csv_row() for r in rows))
    return 0


def cmd_verify(args, out) -> int:
    cap = args.cap if args.cap is not None else config.FULL_ENUMERATION_CAP
    _check_range(args.min, args.max, cap)
    report = verify_all(args.min, args.max, cap=cap)
    if args.format == "json":
        json.dump(report.as_dict(), out, indent=2)
        out.write("\n")
    else:
        out.write(f"verify c={args.min}..{args.max}\n")
        for line in report.lines():
            out.write(line + "\n")
        out.write("ALL PASS\n" if report.passed else "FAILURES\n")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twobridge", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list the words of T(c) or T_p(c) with s and genus")
    e.add_argument("-c", type=int, required=True, help="crossing number")
    e.add_argument("--palindromic", action="store_true", help="only words of palindromic type")
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.add_argument("--cap", type=int, default=None)
    e.set_defaults(func=cmd_enumerate)

    w = sub.add_parser("word", help="inspect one word, given as symbols (+--+) or runs (1,2,1)")
    w.add_argument("word")
    w.add_argument("--format", choices=("text", "json"), default="text")
    w.set_defaults(func=cmd_word)

    for name, func, fmts, default_max in (
        ("stats", cmd_stats, ("csv", "json", "table"), config.DEFAULT_VERIFY_MAX),
        ("verify", cmd_verify, ("text", "json"), config.DEFAULT_VERIFY_MAX),
    ):
        s = sub.add_parser(name, help=f"{name} over a range of crossing numbers")
        s.add_argument("--min", type=int, default=3)
        s.add_argument("--max", type=int, default=default_max)
        s.add_argument("--format", choices=fmts, default=fmts[0])
        s.add_argument("--cap", type=int, default=None, help="raise the enumeration cap")
        if name == "stats":
            s.add_argument("--workers", type=int, default=1)
        s.set_defaults(func=func)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args, out)
    except (UsageError, RangeError) as exc:
        print(f"twobridge {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
