"""Command-line frontend: listings, count tables, series expansion, and the
verification suite.

Exit codes are a fixed contract: 0 on success (all checks passing), 1 when a
verification check fails, 2 on a usage error.  Output is deterministic;
timings are emitted only in the JSON report format.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .counting import (
    count_by_perimeter,
    count_parity_split,
    enumerate_by_perimeter,
    excess_e,
)
from .partitions import (
    ConstraintClass,
    DISTINCT,
    ODD,
    Partition,
    UNRESTRICTED,
    d_distinct,
    g_class,
    make_partition,
    mod_one,
)
from .profile import from_profile, to_profile
from .series import expand, gf_of_class
from .identities import CHECKS, run_checks

DEFAULT_QBOUND = 15
_ENV_QBOUND = "HOOKCOMB_QBOUND_DEFAULT"


def parse_class_spec(text: str) -> ConstraintClass:
    """Grammar: any | distinct | odd | ddistinct:<d> | modone:<d> | gclass:<d>."""
    plain = {"any": UNRESTRICTED, "distinct": DISTINCT, "odd": ODD}
    if text in plain:
        return plain[text]
    factories = {"ddistinct": d_distinct, "modone": mod_one, "gclass": g_class}
    name, sep, arg = text.partition(":")
    if sep and name in factories:
        if not arg.isdigit() or int(arg) < 1:
            raise ValueError(f"class parameter must be a positive integer, got {arg!r}")
        return factories[name](int(arg))
    raise ValueError(f"unknown class spec {text!r}")


def parse_range(text: str) -> tuple[int, int]:
    """'7' or '1..10' -> inclusive (lo, hi)."""
    lo, sep, hi = text.partition("..")
    if not sep:
        hi = lo
    if not lo.isdigit() or not hi.isdigit() or int(lo) < 1 or int(hi) < int(lo):
        raise ValueError(f"bad perimeter range {text!r}")
    return int(lo), int(hi)


def parse_eval_spec(text: str) -> dict[str, int]:
    """'x=1,y=-1' -> {'x': 1, 'y': -1}."""
    out: dict[str, int] = {}
    for piece in text.split(","):
        name, sep, val = piece.partition("=")
        name = name.strip()
        if not sep or name not in ("x", "y", "q"):
            raise ValueError(f"bad eval assignment {piece!r}")
        try:
            out[name] = int(val)
        except ValueError:
            raise ValueError(f"eval value for {name!r} must be an integer") from None
    return out


def partition_text(p: Partition) -> str:
    return ",".join(map(str, p.parts))


def partitions_from_json(text: str) -> list[Partition]:
    """Validator for the JSON listing format: re-parse into partitions."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("expected a JSON array of part arrays")
    return [make_partition(entry) for entry in data]


def _default_qbound() -> int:
    raw = os.environ.get(_ENV_QBOUND)
    if raw is None:
        return DEFAULT_QBOUND
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{_ENV_QBOUND} must be an integer, got {raw!r}") from None


def _csv_out(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands


def _cmd_enumerate(args) -> int:
    parts_list = list(enumerate_by_perimeter(args.perimeter, args.class_spec))
    if args.parts is not None:
        parts_list = [p for p in parts_list if p.length == args.parts]
    if args.largest is not None:
        parts_list = [p for p in parts_list if p.parts[0] == args.largest]
    if args.rank is not None:
        parts_list = [p for p in parts_list if p.parts[0] - p.length == args.rank]
    if args.format == "json":
        print(json.dumps([list(p.parts) for p in parts_list]))
    elif args.format == "csv":
        print(_csv_out(["parts"], [[partition_text(p)] for p in parts_list]), end="")
    else:
        for p in parts_list:
            print(partition_text(p))
    return 0


def _cmd_count(args) -> int:
    lo, hi = args.perimeter
    if args.split_parity and args.class_spec != DISTINCT:
        print("error: --split-parity applies only to --class distinct", file=sys.stderr)
        return 2
    rows = []
    for n in range(lo, hi + 1):
        row: dict = {"perimeter": n, "count": count_by_perimeter(n, args.class_spec)}
        if args.split_parity:
            even, odd = count_parity_split(n)
            row.update({"even": even, "odd": odd, "e": excess_e(n)})
        rows.append(row)
    keys = list(rows[0])
    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        print(_csv_out(keys, [[r[k] for k in keys] for r in rows]), end="")
    else:
        for r in rows:
            print(" ".join(str(r[k]) for k in keys))
    return 0


def _cmd_gf(args) -> int:
    qbound = args.qbound if args.qbound is not None else _default_qbound()
    poly = expand(gf_of_class(args.class_spec), qbound)
    if args.eval:
        poly = poly.substitute(args.eval)
    if args.format == "json":
        print(
            json.dumps(
                {"variables": list(poly.variables), "qbound": qbound, "terms": poly.json_terms()}
            )
        )
    elif args.format == "csv":
        rows = [[coeff, *exps] for exps, coeff in poly.sorted_terms()]
        print(_csv_out(["coeff", *poly.variables], rows), end="")
    else:
        print(poly.text())
    return 0


def _cmd_verify(args) -> int:
    overrides = {
        "max_n": args.max_n,
        "qbound": args.qbound if args.qbound is not None else (
            int(os.environ[_ENV_QBOUND]) if os.environ.get(_ENV_QBOUND) else None
        ),
        "max_size": args.max_size,
        "enum_limit": args.enum_limit,
        "d": args.d,
    }
    try:
        reports = run_checks(args.check, **overrides)
    except KeyError:
        known = ", ".join(sorted(CHECKS))
        print(f"error: unknown check {args.check!r} (known: all, {known})", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps([r.as_dict() for r in reports], sort_keys=True))
    elif args.format == "csv":
        rows = [
            [r.check_id, r.status, json.dumps(r.params, sort_keys=True)] for r in reports
        ]
        print(_csv_out(["check_id", "status", "params"], rows), end="")
    else:
        for r in reports:
            tag = "PASS" if r.passed else "FAIL"
            detail = " ".join(f"{k}={r.params[k]}" for k in sorted(r.params))
            print(f"[{tag}] {r.check_id} ({detail})")
            if r.counterexample is not None:
                print(f"    counterexample: {json.dumps(r.counterexample, sort_keys=True)}")
    return 0 if all(r.passed for r in reports) else 1


def _table_rows(table_id: int) -> tuple[list[str], list[dict]]:
    """The four worked tables: matched columns of equinumerous families."""
    if table_id == 1:
        left = [p for p in enumerate_by_perimeter(9, DISTINCT) if p.length == 4]
        right = [p for p in enumerate_by_perimeter(9, ODD) if p.parts[0] == 7]
        header = ["distinct (perimeter 9, 4 parts)", "odd (perimeter 9, largest 7)"]
        groups = [(9, [left, right])]
    elif table_id == 2:
        left = [p for p in enumerate_by_perimeter(8, DISTINCT) if p.parts[0] == 6]
        right = [p for p in enumerate_by_perimeter(8, ODD) if p.parts[0] + 2 * p.length == 13]
        header = ["distinct (perimeter 8, largest 6)", "odd (perimeter 8, largest+2*parts = 13)"]
        groups = [(8, [left, right])]
    elif table_id == 3:
        left = [p for p in enumerate_by_perimeter(7, DISTINCT) if p.parts[0] - p.length == 2]
        right = [p for p in enumerate_by_perimeter(7, ODD) if p.length == 3]
        header = ["distinct (perimeter 7, rank 2)", "odd (perimeter 7, 3 parts)"]
        groups = [(7, [left, right])]
    elif table_id == 4:
        header = ["ddistinct:2", "modone:2", "gclass:2"]
        groups = []
        for n in range(1, 8):
            col1 = list(enumerate_by_perimeter(n, d_distinct(2)))
            # the matched columns run smallest-first against col1 largest-first
            col2 = list(enumerate_by_perimeter(n, mod_one(2)))[::-1]
            col3 = list(enumerate_by_perimeter(n, g_class(2)))[::-1]
            groups.append((n, [col1, col2, col3]))
    else:
        raise ValueError(f"no table {table_id}; choose 1, 2, 3 or 4")
    rows = []
    for n, cols in groups:
        lengths = {len(c) for c in cols}
        assert len(lengths) == 1, f"table {table_id} columns disagree at perimeter {n}"
        for tup in zip(*cols):
            rows.append({"perimeter": n, "columns": list(tup)})
    return header, rows


def _cmd_table(args) -> int:
    try:
        header, rows = _table_rows(args.id)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(
            json.dumps(
                [
                    {"perimeter": r["perimeter"], "columns": [list(p.parts) for p in r["columns"]]}
                    for r in rows
                ]
            )
        )
    elif args.format == "csv":
        out_rows = [[r["perimeter"], *[partition_text(p) for p in r["columns"]]] for r in rows]
        print(_csv_out(["perimeter", *header], out_rows), end="")
    else:
        for r in rows:
            print(" | ".join(partition_text(p) for p in r["columns"]))
    return 0


def _cmd_word(args) -> int:
    if args.encode:
        p = make_partition(int(x) for x in args.value.split(","))
        print(to_profile(p).text)
    else:
        print(partition_text(from_profile(args.value)))
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_format(sub) -> None:
    sub.add_argument("--format", choices=["text", "json", "csv"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookcomb",
        description="Exact enumeration and verification for partitions graded by largest hook length.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_enum = subs.add_parser("enumerate", help="list partitions with a given perimeter")
    p_enum.add_argument("--perimeter", type=int, required=True)
    p_enum.add_argument("--class", dest="class_spec", type=parse_class_spec, default=UNRESTRICTED)
    p_enum.add_argument("--parts", type=int, help="keep only partitions with this many parts")
    p_enum.add_argument("--largest", type=int, help="keep only partitions with this largest part")
    p_enum.add_argument("--rank", type=int, help="keep only partitions with this rank")
    _add_format(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_count = subs.add_parser("count", help="exact counts over a perimeter range")
    p_count.add_argument("--perimeter", type=parse_range, required=True, metavar="N|LO..HI")
    p_count.add_argument("--class", dest="class_spec", type=parse_class_spec, default=UNRESTRICTED)
    p_count.add_argument("--split-parity", action="store_true", help="add even/odd length columns and their excess")
    _add_format(p_count)
    p_count.set_defaults(func=_cmd_count)

    p_gf = subs.add_parser("gf", help="expand the class generating function")
    p_gf.add_argument("--class", dest="class_spec", type=parse_class_spec, default=UNRESTRICTED)
    p_gf.add_argument("--qbound", type=int, help=f"q-degree cutoff (default {DEFAULT_QBOUND}, or ${_ENV_QBOUND})")
    p_gf.add_argument("--eval", type=parse_eval_spec, help="substitute integers, e.g. x=1,y=-1")
    _add_format(p_gf)
    p_gf.set_defaults(func=_cmd_gf)

    p_verify = subs.add_parser("verify", help="run verification checks")
    p_verify.add_argument("check", help="'all' or a check id")
    p_verify.add_argument("--max-n", dest="max_n", type=int)
    p_verify.add_argument("--qbound", type=int)
    p_verify.add_argument("--max-size", dest="max_size", type=int)
    p_verify.add_argument("--enum-limit", dest="enum_limit", type=int)
    p_verify.add_argument("--d", type=int)
    _add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_table = subs.add_parser("table", help="print one of the worked pairing tables")
    p_table.add_argument("id", type=int, choices=[1, 2, 3, 4])
    _add_format(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_word = subs.add_parser("word", help="convert between partitions and boundary words")
    p_word.add_argument("value", help="an E/N word, or with --encode a comma-joined partition")
    p_word.add_argument("--encode", action="store_true", help="treat the value as a partition and print its word")
    p_word.set_defaults(func=_cmd_word)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
