"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import formulas as F, poset as O, verify
from .excited import enumerate_diagrams, p_D, w_stat
from .kernels import BACKEND
from .mobile import InvalidMobile, MobilePoset
from .qseries import IntPoly

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


class InputError(Exception):
    pass


# -- input -------------------------------------------------------------------

def load_json(source: str):
    """Inline JSON, a path to a JSON file, or '-' for standard input."""
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith(("{", "[")):
        text = source
    else:
        path = Path(source)
        if not path.is_file():
            raise InputError(f"no such input file: {source}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None


def load_mobile(source: str) -> MobilePoset:
    data = load_json(source)
    if not isinstance(data, dict) or "lambda" not in data:
        raise InputError("expected a mobile poset object with a 'lambda' field")
    try:
        return MobilePoset.from_json(data)
    except (InvalidMobile, ValueError, TypeError) as exc:
        raise InputError(f"invalid mobile poset: {exc}") from None


def load_any_poset(source: str) -> tuple[O.LabeledPoset, MobilePoset | None]:
    data = load_json(source)
    if isinstance(data, dict) and "lambda" in data:
        m = load_mobile(source)
        return m.to_poset(), m
    if isinstance(data, dict) and "n" in data:
        try:
            return O.LabeledPoset.from_json(data), None
        except (ValueError, TypeError, KeyError, IndexError) as exc:
            raise InputError(f"invalid poset: {exc}") from None
    raise InputError("expected a mobile poset or an object with 'n', 'covers' and 'omega'")


# -- output ------------------------------------------------------------------

def _poly_json(p: IntPoly) -> dict:
    return {"coefficients": p.to_json(), "valuation": p.valuation if p.coeffs else None,
            "degree": p.degree, "at_one": str(sum(p.coeffs))}


def emit(obj: dict, rows: list[dict] | None, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "csv" and rows is not None:
        if not rows:
            return
        writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        out.write(json.dumps(obj) + "\n")


def _poly_rows(p: IntPoly) -> list[dict]:
    return [{"degree": k, "coefficient": str(c)} for k, c in enumerate(p.coeffs) if c]


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- commands ----------------------------------------------------------------

def cmd_count(args) -> int:
    m = load_mobile(args.input)
    e = F.mobile_count(m)
    obj = {"e": str(e)}
    status = EXIT_OK
    if args.check:
        oracle = O.count_extensions(m.to_poset(), args.cap)
        obj["oracle"] = str(oracle)
        obj["match"] = oracle == e
        status = EXIT_OK if oracle == e else EXIT_MISMATCH
    emit(obj, [{k: v for k, v in obj.items()}], args.format)
    return status


def _poly_command(args, stat: str) -> int:
    m = load_mobile(args.input)
    if stat == "maj":
        poly, P = F.mobile_maj_H(m), m.reversed_schur_labeling()
    else:
        if not m.is_tree_mobile():
            raise InputError("inv-poly needs rooted-tree hangings only")
        poly, P = F.mobile_inv_H(m), m.omega_inv_labeling()
    obj = _poly_json(poly)
    status = EXIT_OK
    if args.check:
        oracle = O.eq_stat(P, stat, args.cap)
        obj["match"] = oracle == poly
        status = EXIT_OK if oracle == poly else EXIT_MISMATCH
    emit(obj, _poly_rows(poly), args.format)
    return status


def cmd_maj(args) -> int:
    return _poly_command(args, "maj")


def cmd_inv(args) -> int:
    return _poly_command(args, "inv")


def cmd_excited(args) -> int:
    m = load_mobile(args.input)
    hooks, mhooks, cols = m.lam.hooks(), m.modified_hooks(), m.column_sizes()
    rows = []
    for D in enumerate_diagrams(m.strip):
        rows.append({"cells": [list(u) for u in sorted(D.cells)],
                     "broken": [list(u) for u in sorted(D.broken)],
                     "w": w_stat(D, hooks.__getitem__),
                     "w_prime": w_stat(D, mhooks.__getitem__),
                     "p_D": p_D(m.strip, D, cols)})
    if args.format == "csv":
        emit({}, [{k: json.dumps(v) if isinstance(v, list) else v for k, v in r.items()} for r in rows], "csv")
    else:
        for r in rows:
            sys.stdout.write(json.dumps(r) + "\n")
    return EXIT_OK


def cmd_hooks(args) -> int:
    m = load_mobile(args.input)
    hooks, mhooks = m.lam.hooks(), m.modified_hooks()
    rows = [{"cell": list(u), "in_strip": u in m.strip, "h": hooks[u], "h_prime": mhooks[u]}
            for u in m.lam.cells()]
    obj = {"cells": rows, "hanging_hooks": sorted(m.hangings_hook_multiset().elements()),
           "H_p": str(m.H_p())}
    csv_rows = [{"i": r["cell"][0], "j": r["cell"][1], "in_strip": r["in_strip"],
                 "h": r["h"], "h_prime": r["h_prime"]} for r in rows]
    emit(obj, csv_rows, args.format)
    return EXIT_OK


def cmd_oracle(args) -> int:
    P, m = load_any_poset(args.input)
    count, maj_poly, inv_poly = O.eq_both(P, args.cap)
    obj = {"n": P.n, "e": str(count), "maj": maj_poly.to_json(), "inv": inv_poly.to_json(),
           "backend": BACKEND}
    rows = [{"degree": k, "maj": str(maj_poly[k]), "inv": str(inv_poly[k])}
            for k in range(max(maj_poly.degree, inv_poly.degree) + 1)]
    emit(obj, rows, args.format)
    return EXIT_OK


def cmd_bounds(args) -> int:
    m = load_mobile(args.input)
    lo, hi = F.bounds(m)
    obj = {"lower": _frac(lo), "upper": _frac(hi), "excited": len(enumerate_diagrams(m.strip))}
    status = EXIT_OK
    if args.check:
        e = O.count_extensions(m.to_poset(), args.cap)
        obj["e"] = str(e)
        obj["sandwich"] = lo <= e <= hi
        status = EXIT_OK if lo <= e <= hi else EXIT_MISMATCH
    emit(obj, [dict(obj)], args.format)
    return status


def cmd_verify(args) -> int:
    report = verify.run_suite(args.corpus, seed=args.seed, workers=args.workers,
                              include_classical=not args.skip_classical)
    rows = [{"check": c.name, "cases": c.cases, "failures": len(c.failures)} for c in report.checks]
    emit(report.to_json(), rows, args.format)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_euler(args) -> int:
    try:
        m = F.euler_family(args.kind, args.p, args.k)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    lo, hi = F.bounds(m)
    clo, chi = F.zigzag_closed_form(args.kind, args.p, args.k)
    obj = {"kind": args.kind, "p": args.p, "k": args.k, "n": m.n, "mobile": m.to_json(),
           "e": str(F.mobile_count(m)), "lower": _frac(lo), "upper": _frac(hi),
           "printed_lower": _frac(clo), "printed_upper": _frac(chi),
           "printed_matches": (lo, hi) == (clo, chi)}
    emit(obj, [{k: v for k, v in obj.items() if k != "mobile"}], args.format)
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobilehook",
        description="Hook-length formulas for linear extensions of mobile posets",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name, func, help_text, check=False):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("input", help="inline JSON, a JSON file path, or - for stdin")
        p.add_argument("--cap", type=int, default=O.DEFAULT_CAP, help="oracle size cap")
        if check:
            p.add_argument("--check", action="store_true", help="compare with the brute-force oracle")
        p.set_defaults(func=func)
        return p

    with_input("count", cmd_count, "number of linear extensions", check=True)
    with_input("maj-poly", cmd_maj, "major-index generating polynomial", check=True)
    with_input("inv-poly", cmd_inv, "inversion generating polynomial (tree hangings)", check=True)
    with_input("excited", cmd_excited, "excited diagrams as JSON lines")
    with_input("hooks", cmd_hooks, "hook and modified hook tables")
    with_input("oracle", cmd_oracle, "brute-force e, maj and inv polynomials")
    with_input("bounds", cmd_bounds, "lower and upper bounds on e", check=True)

    v = sub.add_parser("verify", help="run the property suite against the oracle", parents=[common])
    v.add_argument("--corpus", choices=sorted(verify.CORPORA), default="small")
    v.add_argument("--seed", type=int, default=verify.corpus.DEFAULT_SEED)
    v.add_argument("--workers", type=int, default=None, help="worker processes (default: all cores)")
    v.add_argument("--skip-classical", action="store_true", help="skip the classical-formula checks")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("euler-family", help="zigzag strip with chains or antichains on minimal cells",
                       parents=[common])
    e.add_argument("--kind", choices=["C", "A"], required=True)
    e.add_argument("--p", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.set_defaults(func=cmd_euler)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "cap", 1) < 1 or (getattr(args, "workers", None) or 1) < 1:
        print("error: caps and worker counts must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except O.CapExceeded as exc:
        print(f"error: size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
