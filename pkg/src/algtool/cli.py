"""Command-line entry point: every computation as a subcommand with
deterministic text/JSON output.

Exit codes: 0 success, 2 assertion-style check failure, 1 usage or resource
errors.  JSON output is key-sorted; identical invocations (same seed) give
byte-identical output regardless of --threads.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from fractions import Fraction
from typing import Optional

import numpy as np

from . import clifford, koszul, selftest, shioda5, sklyanin2
from .config import DEFAULT_TOLERANCES, Tolerances
from .cyclotomic import Cyclotomic
from .errors import AlgtoolError
from .gradedalg import (character_coeffs, character_table, hilbert,
                        make_presentation)
from .heisenberg import SimpleRep, parse_element
from .parallel import pmap
from .poly import MultiPoly, poly_to_json, scalar_to_json


class Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors are exit code 1, not argparse's 2
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_scalar(text: str, mode: Optional[str] = None):
    """'3/2' and '2' parse exact, '0.5' parses float; --mode overrides."""
    text = text.strip()
    if mode == "float":
        return float(Fraction(text)) if "/" in text else float(text)
    looks_exact = "/" in text or ("." not in text and "e" not in text.lower())
    if mode == "exact" or looks_exact:
        return Fraction(text)
    return float(text)


def parse_params(text: str, mode: Optional[str] = None):
    return tuple(parse_scalar(tok, mode) for tok in text.split(",") if tok.strip())


def to_jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return [str(obj.numerator), str(obj.denominator)]
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, Cyclotomic):
        return scalar_to_json(obj)
    if isinstance(obj, MultiPoly):
        return poly_to_json(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {k: to_jsonable(v) for k, v in dataclasses.asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return str(obj)


def emit(payload: dict, args, check_failed: bool = False) -> int:
    if args.format == "json":
        text = json.dumps(to_jsonable(payload), sort_keys=True, indent=2)
    else:
        lines = []
        for key, value in payload.items():
            if key == "criteria":
                for c in value:
                    lines.append(f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']}")
                continue
            value = to_jsonable(value)
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            lines.append(f"{key}: {value}")
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 2 if check_failed else 0


def tolerances(args) -> Tolerances:
    return Tolerances(
        rank=args.tol_rank if args.tol_rank is not None else DEFAULT_TOLERANCES.rank,
        span=args.tol_span if args.tol_span is not None else DEFAULT_TOLERANCES.span,
        residual=args.tol_residual if args.tol_residual is not None else DEFAULT_TOLERANCES.residual,
    )


def build_algebra(args):
    kind = args.algebra
    params = parse_params(args.params, "exact") if args.params else ()
    if kind in ("polynomial", "cycle"):
        return make_presentation(kind, args.p)
    if kind == "sklyanin3":
        return make_presentation(kind, *params)
    if kind == "cliffordC":
        return make_presentation(kind, args.p, params)
    if kind == "sklyanin5":
        return make_presentation(kind, *params)
    if kind == "curveCa":
        return make_presentation(kind, *params)
    raise AlgtoolError(f"unknown algebra kind {kind!r}")


# -- subcommand handlers -----------------------------------------------------------


def cmd_hilbert(args) -> int:
    pres = build_algebra(args)
    series = hilbert(pres, args.max_degree, args.max_cells)
    return emit({"algebra": pres.label(), "hilbert": series}, args)


def cmd_charseries(args) -> int:
    pres = build_algebra(args)
    rep = SimpleRep(pres.p, args.rep)
    if args.table:
        table = character_table(pres, rep, args.max_degree, args.max_cells)
        return emit(table.to_json(), args)
    g = parse_element(pres.p, getattr(args, "cls"))
    coeffs = character_coeffs(pres, g, rep, args.max_degree, args.max_cells)
    return emit({"algebra": pres.label(), "class": g.label(),
                 "coeffs": [scalar_to_json(c) for c in coeffs]}, args)


def cmd_koszul_check(args) -> int:
    pres = build_algebra(args)
    rep = SimpleRep(pres.p, args.rep)
    g = parse_element(pres.p, getattr(args, "cls"))
    residuals = koszul.koszul_identity_check(pres, rep, g, args.max_degree)
    zero = all(c.is_zero() for c in residuals)
    payload = {"algebra": pres.label(), "class": g.label(), "zero": zero,
               "residuals": [scalar_to_json(c) for c in residuals]}
    return emit(payload, args, check_failed=not zero)


def cmd_clifford_strata(args) -> int:
    form = clifford.to_complex_form(clifford.example_form_dim3(parse_scalar(args.t, "exact")))
    rng = np.random.default_rng(args.seed)
    tol = tolerances(args)
    records = []

    def record(point) -> dict:
        mat = form.specialize(list(point))
        rank = clifford.symmetric_rank(mat, "float", tol.rank)
        reps = clifford.build_reps(mat, rank)
        return {
            "point": [to_jsonable(complex(v)) for v in point],
            "rank": rank,
            "simple": dataclasses.asdict(clifford.simple_profile(rank, form.size)),
            "fat": dataclasses.asdict(clifford.fat_profile(rank)) if rank else None,
            "residuals": reps.max_residual,
        }

    generic = []
    for _ in range(args.samples):
        pt = rng.standard_normal(form.size) + 1j * rng.standard_normal(form.size)
        generic.append(pt / np.abs(pt).max())
    drops = clifford.sample_rank_drop_points(form, max(2, args.samples // 2),
                                             args.seed + 1, tol.rank)
    records = pmap(record, generic + drops, args.threads)
    return emit({"t": args.t, "strata": records}, args)


def _curve_point_args(args):
    a = parse_scalar(args.a, args.mode)
    b = parse_scalar(args.b, args.mode)
    return a, b


def cmd_sklyanin2(args) -> int:
    tol = tolerances(args)
    op = args.operation
    if op == "curve":
        grid = parse_params(args.grid, "exact")
        points = sklyanin2.curve_points_on_grid(grid)
        payload = {
            "points": [{"a": cp.a, "b": cp.b, "residual": abs(cp.residual),
                        "t": to_jsonable(sklyanin2.t_param(cp.a, cp.b))}
                       for cp in points],
            "singularity_report": {
                k: v for k, v in sklyanin2.curve_singularity_report().items()
            },
        }
        return emit(payload, args)
    if op == "t":
        a, b = _curve_point_args(args)
        t = sklyanin2.t_param(a, b)
        return emit({"a": a, "b": b,
                     "t": "indeterminate" if t is None else to_jsonable(t)}, args)
    if op == "eliminate":
        res = sklyanin2.eliminate_t()
        payload = {"check": res.check, "cofactor": res.cofactor,
                   "resultant_terms": len(res.resultant.terms)}
        return emit(payload, args, check_failed=not res.check)
    if op == "minors":
        a, b = _curve_point_args(args)
        report = sklyanin2.point_module_check((a, b), tol)
        ok = report.max_minor_residual < tol.span and report.all_rank_two
        return emit(dataclasses.asdict(report), args, check_failed=not ok)
    if op == "ideal":
        a, b = _curve_point_args(args)
        report = sklyanin2.minor_ideal_checks((a, b), tol)
        return emit(dataclasses.asdict(report), args,
                    check_failed=not (report.deg6 and report.deg8))
    if op == "secant":
        a, b = _curve_point_args(args)
        report = sklyanin2.secant_check((a, b), tol)
        return emit(dataclasses.asdict(report), args,
                    check_failed=report.residual >= tol.span)
    if op == "stratify":
        a, b = _curve_point_args(args)
        report = sklyanin2.stratify((a, b), args.samples, args.seed, tol)
        expected = {"generic": 5, "det-zero": 4, "E-prime": 2}
        ok = all(all(r == expected[s.name] for r in s.ranks) for s in report.strata)
        return emit(dataclasses.asdict(report), args, check_failed=not ok)
    if op == "onedim":
        params = sklyanin2.OrderTwoParams(args.p, parse_params(args.params, "exact"))
        reps = sklyanin2.onedim_reps(params)
        payload = {"count": len(reps),
                   "reps": [[scalar_to_json(y) for y in tup] for tup in reps]}
        return emit(payload, args)
    raise AlgtoolError(f"unknown sklyanin2 operation {op!r}")


def cmd_shioda5(args) -> int:
    op = args.operation
    if op == "minors":
        minors = shioda5.s15_minors()
        return emit({"count": len(minors), "minors": minors}, args)
    if op == "orbit":
        report = shioda5.ca_orbit_check(parse_scalar(args.a, "exact"))
        return emit(dataclasses.asdict(report), args, check_failed=not report.ok)
    if op == "two-torsion":
        report = shioda5.two_torsion_check(args.samples, args.seed)
        return emit(dataclasses.asdict(report), args, check_failed=not report.ok())
    if op == "singular":
        report = shioda5.singular_points_check(tolerances(args).rank)
        payload = dataclasses.asdict(report)
        payload["points"] = [[scalar_to_json(c) for c in pt]
                             for pt in shioda5.thirty_points()]
        return emit(payload, args, check_failed=not report.ok())
    if op == "fiber":
        report = shioda5.cycle_fiber_equivalence()
        return emit(dataclasses.asdict(report), args, check_failed=not report.ok())
    raise AlgtoolError(f"unknown shioda5 operation {op!r}")


def cmd_selftest(args) -> int:
    only = [c.strip() for c in args.criteria.split(",")] if args.criteria else None
    report = selftest.run_selftest(seed=args.seed, threads=args.threads, only=only)
    return emit(report, args, check_failed=not report["passed"])


# -- parser ------------------------------------------------------------------------


def build_parser() -> Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--out", default=None, help="write the report to a file")
    common.add_argument("--tol-rank", type=float, default=None)
    common.add_argument("--tol-span", type=float, default=None)
    common.add_argument("--tol-residual", type=float, default=None)
    common.add_argument("--max-cells", type=int, default=None,
                        help="resource cap override (also env ALGTOOL_MAX_CELLS)")

    parser = Parser(prog="algtool", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("--algebra", required=True,
                         choices=("polynomial", "cycle", "sklyanin3", "cliffordC",
                                  "sklyanin5", "curveCa"))
    algebra.add_argument("--p", type=int, default=5)
    algebra.add_argument("--params", default=None,
                         help="comma-separated exact parameters, e.g. 1,1,-1")

    p = sub.add_parser("hilbert", parents=[common, algebra])
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("charseries", parents=[common, algebra])
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--class", dest="cls", default="1")
    p.add_argument("--rep", type=int, default=1)
    p.add_argument("--table", action="store_true", help="all conjugacy classes")
    p.set_defaults(func=cmd_charseries)

    p = sub.add_parser("koszul-check", parents=[common, algebra])
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--class", dest="cls", default="1")
    p.add_argument("--rep", type=int, default=1)
    p.set_defaults(func=cmd_koszul_check)

    p = sub.add_parser("clifford-strata", parents=[common])
    p.add_argument("--t", default="1", help="parameter of the 3-generator form")
    p.add_argument("--samples", type=int, default=6)
    p.set_defaults(func=cmd_clifford_strata)

    p = sub.add_parser("sklyanin2", parents=[common])
    p.add_argument("operation", choices=("curve", "t", "eliminate", "minors",
                                         "ideal", "secant", "onedim", "stratify"))
    p.add_argument("--a", default="1")
    p.add_argument("--b", default="1")
    p.add_argument("--mode", choices=("exact", "float"), default=None)
    p.add_argument("--grid", default="1,3/2,1/2")
    p.add_argument("--samples", type=int, default=6)
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--params", default="1,2,2")
    p.set_defaults(func=cmd_sklyanin2)

    p = sub.add_parser("shioda5", parents=[common])
    p.add_argument("operation", choices=("minors", "orbit", "two-torsion",
                                         "singular", "fiber"))
    p.add_argument("--a", default="1")
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(func=cmd_shioda5)

    p = sub.add_parser("selftest", parents=[common])
    p.add_argument("--criteria", default=None, help="run a subset, e.g. 1,2,9")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_cells is not None:
        import os
        os.environ["ALGTOOL_MAX_CELLS"] = str(args.max_cells)
    try:
        return args.func(args)
    except AlgtoolError as exc:
        payload = {"error": {"code": exc.code, "message": str(exc)}}
        if args.format == "json":
            print(json.dumps(payload, sort_keys=True))
        else:
            print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
