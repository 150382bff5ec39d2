"""Command line front end: emit triangles and sequences in machine-readable
formats, run the verification suites, and query the enumeration oracle.

Exit codes: 0 success, 1 verification failure, 2 usage error (including
enumeration bound violations).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import sequences, verify
from .permcore import EnumerationLimitError, MODES, oracle_total, oracle_triangle
from .riordan import make_triangle_B, unsigned_conjugate

TRIANGLE_FAMILIES = ("stirling-b", "inverse", "stirling-a")
SEQUENCE_FAMILIES = ("d", "lattice", "tree", "incomplete", "typeb-factorial")
FAMILIES = TRIANGLE_FAMILIES + SEQUENCE_FAMILIES

FORMATS = ("csv", "json", "pretty")

DEFAULT_SIZE = 8


class UsageError(Exception):
    pass


def _triangle_rows(family: str, rows: int, m: int, r: int, mode: str):
    if family == "stirling-b":
        vals = [
            [sequences.triangle_gem_rec(n, k, r, m) for k in range(n + 1)]
            for n in range(rows)
        ]
        return vals, "recurrence"
    if family == "inverse":
        if m != 2:
            raise UsageError("family 'inverse' supports --m 2 only")
        conj = unsigned_conjugate(make_triangle_B(2, r, order=max(rows - 1, 1)).invert())
        vals = []
        for n in range(rows):
            row = []
            for k in range(n + 1):
                v = conj.entry(n, k)
                if v.denominator != 1:
                    raise UsageError("non-integer inverse entry at (%d, %d)" % (n, k))
                row.append(int(v))
            vals.append(row)
        return vals, "riordan"
    if family == "stirling-a":
        vals = [
            [sequences.stirlingA(n, k, mode, m) for k in range(n + 1)]
            for n in range(rows)
        ]
        return vals, "recurrence"
    raise UsageError("unknown triangle family %r" % (family,))


def _sequence_terms(family: str, terms: int, m: int, r: int, mode: str):
    if family == "d":
        return [sequences.d_rec(r, n) for n in range(terms)], "recurrence"
    if family == "lattice":
        return [sequences.lattice_S(r, n) for n in range(terms)], "explicit"
    if family == "tree":
        return [sequences.tree_count(n) for n in range(terms)], "riordan"
    if family == "incomplete":
        return [
            sequences.incomplete_factorial(n, mode, m) for n in range(terms)
        ], "recurrence"
    if family == "typeb-factorial":
        return [
            sequences.typeB_factorial_conv(n, mode, m) for n in range(terms)
        ], "explicit"
    raise UsageError("unknown sequence family %r" % (family,))


def _render_rows(rows, fmt, payload):
    if fmt == "pretty":
        return "\n".join(" ".join(str(v) for v in row) for row in rows)
    if fmt == "csv":
        return "\n".join(",".join(str(v) for v in row) for row in rows)
    payload["rows"] = rows
    return json.dumps(payload, sort_keys=True)


def _render_terms(terms, fmt, payload):
    if fmt == "pretty":
        return " ".join(str(v) for v in terms)
    if fmt == "csv":
        return "\n".join(str(v) for v in terms)
    payload["terms"] = list(terms)
    payload["rows"] = [[v] for v in terms]
    return json.dumps(payload, sort_keys=True)


def _cmd_table(args) -> str:
    family = args.family
    m = args.m if args.m is not None else 2
    r = args.r if args.r is not None else 0
    if m < 0 or r < 0:
        raise UsageError("--m and --r must be >= 0")
    payload = {
        "family": family,
        "m": m if family in ("stirling-b", "inverse", "stirling-a", "incomplete", "typeb-factorial") else None,
        "r": r if family in ("stirling-b", "inverse", "stirling-a", "d", "lattice") else None,
    }
    if family in ("stirling-a", "incomplete", "typeb-factorial"):
        payload["mode"] = args.mode
    if family in TRIANGLE_FAMILIES:
        size = args.rows if args.rows is not None else args.terms
        size = size if size is not None else DEFAULT_SIZE
        if size < 1:
            raise UsageError("--rows must be >= 1")
        rows, provenance = _triangle_rows(family, size, m, r, args.mode)
        payload["provenance"] = provenance
        return _render_rows(rows, args.format, payload)
    size = args.terms if args.terms is not None else args.rows
    size = size if size is not None else DEFAULT_SIZE
    if size < 1:
        raise UsageError("--terms must be >= 1")
    terms, provenance = _sequence_terms(family, size, m, r, args.mode)
    payload["provenance"] = provenance
    return _render_terms(terms, args.format, payload)


def _cmd_verify(args) -> tuple[str, int]:
    report = verify.run_scope(
        args.scope,
        max_n=args.max_n,
        max_r=args.max_r,
        seed=args.seed,
        samples=args.samples,
        bound=args.max_enum,
        precision=args.precision,
    )
    return "\n".join(report.lines()), 0 if report.ok else 1


def _cmd_oracle(args) -> str:
    if args.k is None:
        value = oracle_total(args.n, args.r, args.mode, args.m, bound=args.max_enum)
    else:
        value = oracle_triangle(
            args.n, args.r, args.k, args.mode, args.m, bound=args.max_enum
        )
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirlingb",
        description="Exact tables, sequences and cross-checks for signed-"
        "permutation cycle statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit a triangle or sequence family")
    table.add_argument("family", choices=FAMILIES)
    _add_common_value_flags(table)

    seq = sub.add_parser("seq", help="emit a sequence family (one value per n)")
    seq.add_argument("family", choices=SEQUENCE_FAMILIES)
    _add_common_value_flags(seq)

    ver = sub.add_parser("verify", help="run a cross-route verification scope")
    ver.add_argument("scope", choices=verify.SCOPES)
    ver.add_argument("--max-n", dest="max_n", type=int, default=None)
    ver.add_argument("--max-r", dest="max_r", type=int, default=None)
    ver.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    ver.add_argument("--samples", type=int, default=12)
    ver.add_argument("--max-enum", dest="max_enum", type=int, default=None)
    ver.add_argument(
        "--precision",
        type=int,
        default=30,
        help="decimal digits when reporting asymptotic ratios",
    )

    orc = sub.add_parser("oracle", help="brute-force enumeration count")
    orc.add_argument("--n", type=int, required=True)
    orc.add_argument("--r", type=int, default=0)
    orc.add_argument("--mode", choices=MODES, default="assoc")
    orc.add_argument("--m", type=int, default=2)
    orc.add_argument("--k", type=int, default=None)
    orc.add_argument("--max-enum", dest="max_enum", type=int, default=None)
    return parser


def _add_common_value_flags(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--m", type=int, default=None)
    cmd.add_argument("--r", type=int, default=None)
    cmd.add_argument("--rows", type=int, default=None)
    cmd.add_argument("--terms", type=int, default=None)
    cmd.add_argument("--mode", choices=MODES, default="assoc")
    cmd.add_argument("--format", choices=FORMATS, default="pretty")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in ("table", "seq"):
            print(_cmd_table(args))
            return 0
        if args.command == "verify":
            text, code = _cmd_verify(args)
            print(text)
            return code
        if args.command == "oracle":
            print(_cmd_oracle(args))
            return 0
    except EnumerationLimitError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (UsageError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    raise AssertionError("unreachable command %r" % (args.command,))


if __name__ == "__main__":
    sys.exit(main())
