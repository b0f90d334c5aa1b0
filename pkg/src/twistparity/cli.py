"""``twistparity`` command line.

Exit codes: 0 ok, 1 verification mismatch, 2 usage/parse error, 3 computational failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .arith import parse_rational
from .descent import cross_check, regenerate_quartic_table
from .errors import FactorizationError, InvalidInput, PrecisionExhausted, TableError, TwistParityError
from .parity import classify
from .records import ClassificationRecord, crosscheck_row_dict, parse_rank_fixture, record_for
from .tables import builtin_table, diff_tables, dump_table, load_table

FAMILIES = ("quadratic", "quartic", "sextic")
EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.replace("−", "-").partition("..")
    try:
        if not sep:
            raise ValueError
        a, b = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range must look like a..b, got {text!r}") from None
    return a, b


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_fixture(args):
    if args.family != "quadratic":
        return None
    if not args.fixture:
        raise UsageError("--family quadratic needs --fixture")
    return load_table(_read(args.fixture))


def _out(obj):
    print(obj if isinstance(obj, str) else json.dumps(obj, separators=(",", ":")))


def _classify_item(item):
    family, text, fixture = item
    try:
        return record_for(classify(family, parse_rational(text), fixture), text)
    except TwistParityError as exc:
        return ClassificationRecord(family, text, error=f"{type(exc).__name__}: {exc}")


def _pool_map(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            yield from pool.map(fn, items, chunksize=16)
    else:
        yield from map(fn, items)


def cmd_classify(args) -> int:
    if args.d is None:
        raise UsageError("classify needs -d")
    fixture = _load_fixture(args)
    d = parse_rational(args.d)
    _out(record_for(classify(args.family, d, fixture), args.d).to_json())
    return EXIT_OK


def cmd_batch(args) -> int:
    fixture = _load_fixture(args)
    if bool(args.range) == bool(args.input):
        raise UsageError("batch needs exactly one of --range or --input")
    if args.range:
        lo, hi = parse_range(args.range)
        inputs = [str(d) for d in range(lo, hi + 1)]
    else:
        inputs = [ln.strip() for ln in _read(args.input).splitlines()]
        inputs = [t for t in inputs if t and not t.startswith("#")]
    for rec in _pool_map(_classify_item, [(args.family, t, fixture) for t in inputs], args.jobs):
        _out(rec.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.table:
        table, conflicts = regenerate_quartic_table()
        diff = diff_tables(builtin_table("quartic"), table)
        sys.stdout.write(dump_table(table))
        for line in diff:
            _out(f"# differs from built-in: {line}")
        for d in conflicts:
            _out(f"# inconsistent representative: {d}")
        return EXIT_MISMATCH if diff or conflicts else EXIT_OK
    if not args.range:
        raise UsageError("verify needs --range (or --table)")
    lo, hi = parse_range(args.range)
    report = cross_check(lo, hi, jobs=args.jobs)
    for row in report.rows:
        _out(crosscheck_row_dict(row))
    _out({"summary": {"checked": len(report.rows), "disagreements": [r.d for r in report.disagreements]}})
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_tables(args) -> int:
    if args.action == "emit":
        families = [args.family] if args.family else ["quartic", "sextic"]
        for fam in families:
            sys.stdout.write(dump_table(builtin_table(fam)))
        return EXIT_OK
    path = args.path or args.fixture
    if not path:
        raise UsageError("tables check needs a table file")
    user = load_table(_read(path))
    if user.family not in ("quartic", "sextic"):
        raise UsageError(f"no built-in table for family {user.family}")
    diff = diff_tables(builtin_table(user.family), user)
    for line in diff:
        _out(line)
    return EXIT_MISMATCH if diff else EXIT_OK


def cmd_fixture_check(args) -> int:
    if args.family == "quadratic":
        raise UsageError("fixture-check supports the quartic and sextic families")
    if not args.fixture:
        raise UsageError("fixture-check needs --fixture")
    fx = parse_rank_fixture(_read(args.fixture), args.family)
    mismatches = []
    for d, rank in fx.rows:
        got = classify(args.family, d).total
        ok = got == rank % 2
        if not ok:
            mismatches.append(d)
        _out({"d": d, "rank": rank, "parity": got, "agree": ok})
    _out({"summary": {"checked": len(fx.rows), "mismatches": mismatches, "provenance": fx.provenance}})
    return EXIT_MISMATCH if mismatches else EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "batch": cmd_batch,
    "verify": cmd_verify,
    "tables": cmd_tables,
    "fixture-check": cmd_fixture_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILIES)
    common.add_argument("-d", help="twist parameter, a or a/b")
    common.add_argument("--range", help="inclusive integer range a..b")
    common.add_argument("--input", help="file with one rational per line")
    common.add_argument("--fixture", help="table or rank fixture file")
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="twistparity", description="Conjectural rank parities of quartic and sextic twists over Q.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("classify", "batch", "fixture-check"):
        sub.add_parser(name, parents=[common])
    verify = sub.add_parser("verify", parents=[common])
    verify.add_argument("--table", action="store_true", help="regenerate the quartic table from descent")
    tables = sub.add_parser("tables", parents=[common])
    tables.add_argument("action", choices=("emit", "check"))
    tables.add_argument("path", nargs="?")
    return parser


def _join_negative_values(argv):
    # argparse reads "-d -1/2" as two options
    out, it = [], iter(argv)
    for tok in it:
        if tok in ("-d", "--range"):
            nxt = next(it, None)
            if nxt is not None and nxt.startswith(("-", "−")) and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command in ("classify", "batch", "fixture-check") and args.family is None:
        print(f"twistparity {args.command}: --family is required", file=sys.stderr)
        return EXIT_USAGE
    if args.jobs < 1:
        print("twistparity: --jobs must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except (UsageError, InvalidInput, TableError) as exc:
        print(f"twistparity: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FactorizationError, PrecisionExhausted) as exc:
        print(f"twistparity: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
