"""Command-line front end.

Subcommands expose the type arithmetic (tensor, wedge, tensor-bilinear,
consec-ones), the two classification engines (thmA, thmC), table
regeneration with golden-file comparison, the matrix cross-check sweep, and
the distinguished-class verification sweeps.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .crosscheck import run_crosscheck
from .distinguished import (
    verify_prop_A_irr,
    verify_prop_A_tensor,
    verify_prop_C,
    verify_prop_tensor,
)
from .enumeration import jordan_types, symplectic_types
from .hesselink import SymplecticType, tensor_bilinear
from .jordan import JordanType, ParseError, consecutive_ones, tensor, wedge_square
from .reps import dual_tensor_classes, wedge_square_classes


def _parse_or_exit(parser_fn, text: str, what: str):
    try:
        return parser_fn(text)
    except ParseError as exc:
        print(f"error: invalid {what}: {exc.caret_message()}", file=sys.stderr)
        raise SystemExit(2)
    except ValueError as exc:
        print(f"error: invalid {what} {text!r}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _cmd_tensor(args) -> int:
    j1 = _parse_or_exit(JordanType.parse, args.left, "Jordan type")
    j2 = _parse_or_exit(JordanType.parse, args.right, "Jordan type")
    out = tensor(j1, j2)
    _emit(args, str(out), {"tensor": out.to_json()})
    return 0


def _cmd_wedge(args) -> int:
    j = _parse_or_exit(JordanType.parse, args.type, "Jordan type")
    out = wedge_square(j)
    _emit(args, str(out), {"wedge": out.to_json()})
    return 0


def _cmd_tensor_bilinear(args) -> int:
    s1 = _parse_or_exit(SymplecticType.parse, args.left, "symplectic type")
    s2 = _parse_or_exit(SymplecticType.parse, args.right, "symplectic type")
    out = tensor_bilinear(s1, s2)
    _emit(args, str(out), {"tensor": out.to_json()})
    return 0


def _cmd_consec_ones(args) -> int:
    if args.n <= 0:
        print("error: n must be positive", file=sys.stderr)
        return 2
    exp = consecutive_ones(args.n)
    _emit(args, str(exp), {"n": args.n, **exp.to_json()})
    return 0


def _cmd_thm_a(args) -> int:
    j = _parse_or_exit(JordanType.parse, args.type, "Jordan type")
    try:
        res = dual_tensor_classes(j)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, f"{res.tensor_space} | {res.irreducible}", {"input": j.to_json(), **res.to_json()})
    return 0


def _cmd_thm_c(args) -> int:
    s = _parse_or_exit(SymplecticType.parse, args.type, "symplectic type")
    try:
        res = wedge_square_classes(s)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args, f"{res.wedge_space} | {res.irreducible}", {"input": s.to_json(), **res.to_json()})
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        return int(lo), int(hi)
    n = int(text)
    return n, n


def table_a_rows(n_lo: int, n_hi: int) -> list[str]:
    """Rows for the special linear table, one per non-trivial Jordan type."""
    rows = []
    for n in range(max(2, n_lo), n_hi + 1):
        for j in jordan_types(n, include_trivial=False):
            res = dual_tensor_classes(j)
            rows.append(f"{j.pretty()} | {res.tensor_space.pretty()} | {res.irreducible.pretty()}")
    return rows


def table_c_rows(n_lo: int, n_hi: int, show_all: bool = False) -> list[str]:
    """Rows for the symplectic table, one per class.

    Mirrors the published selection: every non-trivial class for n <= 3, only
    those with positive 2-adic content for larger n; show_all lifts the
    restriction.
    """
    rows = []
    for n in range(max(2, n_lo), n_hi + 1):
        restrict = (not show_all) and n > 3
        for s in symplectic_types(2 * n, alpha_positive=restrict, include_trivial=False):
            res = wedge_square_classes(s)
            rows.append(f"{s.pretty()} | {res.wedge_space.pretty()} | {res.irreducible.pretty()} | {res.alpha}")
    return rows


def _cmd_table(args) -> int:
    try:
        lo, hi = _parse_range(args.range)
    except ValueError:
        print(f"error: bad range {args.range!r}, expected N or LO..HI", file=sys.stderr)
        return 2
    if args.which == "A":
        rows = table_a_rows(lo, hi)
    else:
        rows = table_c_rows(lo, hi, show_all=args.all)
    if args.json:
        print(json.dumps({"table": args.which, "rows": rows}))
    else:
        for row in rows:
            print(row)
    if args.golden:
        with open(args.golden, "r", encoding="utf-8") as fh:
            expected = [line.rstrip("\n") for line in fh if line.strip()]
        if rows != expected:
            for i, (got, want) in enumerate(zip(rows, expected)):
                if got != want:
                    print(f"golden mismatch at row {i}:\n  got  {got}\n  want {want}", file=sys.stderr)
                    break
            if len(rows) != len(expected):
                print(f"golden mismatch: {len(rows)} rows computed, {len(expected)} expected", file=sys.stderr)
            return 1
        print(f"golden check passed: {len(rows)} rows", file=sys.stderr)
    return 0


def _cmd_oracle_check(args) -> int:
    report = run_crosscheck(max_dim=args.max_dim, max_n=args.max_n, jobs=args.jobs)
    if args.dump_matrices:
        from . import oracle

        for s in symplectic_types(min(args.max_dim, 6)):
            space = oracle.space_from_type(s)
            print(f"class {s}:\n{space.ascii_grids()}")
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(report.summary())
        for line in report.mismatches + report.parity_violations:
            print(f"  {line}")
    return 0 if report.ok else 1


def _cmd_distinguished(args) -> int:
    reports = [
        verify_prop_A_tensor(args.max_n),
        verify_prop_A_irr(args.max_n),
        verify_prop_tensor(args.max_dim),
        verify_prop_C(args.max_n),
    ]
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for r in reports:
            print(r.summary())
            for line in r.counterexamples:
                print(f"  {line}")
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sp2forms",
        description="Jordan types and symplectic class data of unipotent elements in characteristic two.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tensor", help="Jordan type of a tensor product.")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_tensor)

    p = sub.add_parser("wedge", help="Jordan type of an exterior square.")
    p.add_argument("type")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_wedge)

    p = sub.add_parser("tensor-bilinear", help="Class of a tensor product of symplectic classes.")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_tensor_bilinear)

    p = sub.add_parser("consec-ones", help="Minimal alternating expansion into powers of two.")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_consec_ones)

    p = sub.add_parser("thmA", help="Classes on the dual tensor square and its subquotient.")
    p.add_argument("type", help="Jordan type of the element, e.g. '5' or '1,2^2'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_thm_a)

    p = sub.add_parser("thmC", help="Classes on the wedge square and its subquotient.")
    p.add_argument("type", help="symplectic class, e.g. '4_1' or '2_0^2,8_1'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_thm_c)

    p = sub.add_parser("table", help="Regenerate a classification table.")
    p.add_argument("which", choices=("A", "C"))
    p.add_argument("range", help="N or LO..HI (dimension for A, half-dimension for C)")
    p.add_argument("--golden", metavar="FILE", help="compare against stored rows; exit 1 on mismatch")
    p.add_argument("--all", action="store_true", help="table C: include classes of 2-adic content zero")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("oracle-check", help="Matrix cross-check of the combinatorial rules.")
    p.add_argument("--max-dim", type=int, default=8, help="largest symplectic dimension to sweep")
    p.add_argument("--max-n", type=int, default=6, help="largest special linear dimension to sweep")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $SP2FORMS_JOBS or 1)")
    p.add_argument("--dump-matrices", action="store_true", help="print small constructed matrices as 0/1 grids")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_oracle_check)

    p = sub.add_parser("distinguished", help="Verify the distinguished-class sweeps.")
    p.add_argument("--max-n", type=int, default=12, help="dimension bound for the single-space sweeps")
    p.add_argument("--max-dim", type=int, default=24, help="product dimension bound for the pair sweep")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_distinguished)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
