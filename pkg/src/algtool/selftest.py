"""The acceptance suite as importable checks; the CLI `selftest` subcommand
and tests/test_acceptance.py both run these.

Each criterion returns a CheckResult whose details are JSON-serializable and
deterministic for a fixed seed, independent of the worker count.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import numpy as np

from . import clifford, koszul, shioda5, sklyanin2
from .config import DEFAULT_TOLERANCES
from .cyclotomic import Cyclotomic
from .gradedalg import (character_coeffs, character_table, hilbert,
                        make_presentation)
from .heisenberg import (HeisenbergElement, SimpleRep, all_irreducibles,
                         conjugacy_classes)
from .parallel import pmap

# (1:1:-t) for t in {1, 3, 1/2, -2, 5}; the rational degenerate values of
# the 3-generator family are t in {0, 2, -1}
SKLYANIN3_SAMPLES = (
    (1, 1, -1), (1, 1, -3), (1, 1, Fraction(-1, 2)), (1, 1, 2), (1, 1, -5),
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}"


def _orthogonality_exact(p: int) -> bool:
    classes = conjugacy_classes(p)
    reps = all_irreducibles(p)
    order = p ** 3
    for i, v in enumerate(reps):
        for w in reps[i:]:
            acc = Cyclotomic(p)
            for g, size in classes:
                acc = acc + v.character(g) * w.character(g).conjugate() * size
            expected = order if v == w else 0
            if acc != expected:
                return False
    return True


def criterion_1_heisenberg(seed: int = 0, threads: int = 1) -> CheckResult:
    details = {}
    ok = True
    for p in (3, 5):
        classes = conjugacy_classes(p)
        details[f"classes_p{p}"] = len(classes)
        details[f"sizes_sum_p{p}"] = sum(s for _, s in classes)
        ok &= len(classes) == p * p + p - 1
        ok &= sum(s for _, s in classes) == p ** 3
        ortho = _orthogonality_exact(p)
        details[f"orthogonality_p{p}"] = ortho
        ok &= ortho
    return CheckResult("1-heisenberg-structure", ok, details)


HILBERT_FIXTURES = (
    ("polynomial", (5,), 4, [1, 5, 15, 35, 70]),
    ("cycle", (5,), 4, [1, 5, 10, 15, 20]),
    ("sklyanin3", (1, 1, -1), 5, [1, 3, 6, 10, 15, 21]),
    ("cliffordC", (5, (1, 2, 3)), 4, [1, 5, 15, 35, 70]),
    ("sklyanin5", (2, 2), 3, [1, 5, 15, 35]),
)


def criterion_2_hilbert(seed: int = 0, threads: int = 1) -> CheckResult:
    details = {}
    ok = True
    for kind, params, n, expected in HILBERT_FIXTURES:
        got = hilbert(make_presentation(kind, *params), n)
        details[f"{kind}{params}"] = got
        ok &= got == expected
    return CheckResult("2-hilbert-fixtures", ok, details)


def _closed_form_table(p: int, hilb: List[int], n: int):
    """Expected rows for an elliptic-type algebra: identity/centre rows from
    the Hilbert numbers twisted by w^(k n); all other classes constant 1."""
    rows = []
    for g, _size in conjugacy_classes(p):
        if g.is_central():
            coeffs = tuple(Cyclotomic.zeta(p, g.k * d) * hilb[d] for d in range(n + 1))
        else:
            coeffs = tuple(Cyclotomic.from_rational(p, 1 if d == 0 else 0)
                           for d in range(n + 1))
        rows.append((g.label(), coeffs))
    return rows


def criterion_3_charseries(seed: int = 0, threads: int = 1) -> CheckResult:
    details = {}
    ok = True
    rep3, rep5 = SimpleRep(3, 1), SimpleRep(5, 1)

    poly3 = make_presentation("polynomial", 3)
    got = character_coeffs(poly3, HeisenbergElement(3, 1, 0, 0), rep3, 3)
    details["poly3_e1"] = [str(c) for c in got]
    ok &= got == [Cyclotomic.from_rational(3, v) for v in (1, 0, 0, 1)]

    # centre rows equal w^(k n) H_n (tested across both primes)
    for pres, rep, n in ((poly3, rep3, 4), (make_presentation("cycle", 5), rep5, 4)):
        hilb = hilbert(pres, n)
        for k in range(1, pres.p):
            got = character_coeffs(pres, HeisenbergElement(pres.p, 0, 0, k), rep, n)
            want = [Cyclotomic.zeta(pres.p, k * d) * hilb[d] for d in range(n + 1)]
            ok &= got == want
    details["centre_rows"] = ok

    cycle5 = make_presentation("cycle", 5)
    non_central_ok = True
    for g, _size in conjugacy_classes(5):
        if g.is_central():
            continue
        got = character_coeffs(cycle5, g, rep5, 4)
        non_central_ok &= got == [Cyclotomic.from_rational(5, 1 if d == 0 else 0)
                                  for d in range(5)]
    details["cycle5_noncentral"] = non_central_ok
    ok &= non_central_ok

    ca1 = make_presentation("curveCa", 1)
    table = character_table(ca1, rep5, 4)
    expected = _closed_form_table(5, [1, 5, 10, 15, 20], 4)
    ca_ok = list(table.rows) == expected
    details["curveCa1_closed_forms"] = ca_ok
    ok &= ca_ok

    poly_table = character_table(poly3, rep3, 4)
    sk_ok = True
    for params in SKLYANIN3_SAMPLES:
        sk = make_presentation("sklyanin3", *params)
        sk_ok &= character_table(sk, rep3, 4).same_series(poly_table)
    details["sklyanin3_5_samples"] = sk_ok
    ok &= sk_ok

    return CheckResult("3-character-series-fixtures", ok, details)


def criterion_4_koszul(seed: int = 0, threads: int = 1) -> CheckResult:
    details = {}
    ok = True
    poly3 = make_presentation("polynomial", 3)
    rep3 = SimpleRep(3, 1)
    for label, g in (("1", HeisenbergElement(3)),
                     ("z", HeisenbergElement(3, 0, 0, 1)),
                     ("e1", HeisenbergElement(3, 1, 0, 0))):
        res = koszul.koszul_identity_check(poly3, rep3, g, 4)
        zero = all(c.is_zero() for c in res)
        details[f"residuals_{label}"] = zero
        ok &= zero
    dual = koszul.quadratic_dual(poly3).dual
    dual_hilb = hilbert(dual, 4)
    details["dual_hilbert"] = dual_hilb
    ok &= dual_hilb == [1, 3, 3, 1, 0]
    return CheckResult("4-koszul-identity", ok, details)


def criterion_5_clifford(seed: int = 0, threads: int = 1) -> CheckResult:
    details = {}
    ok = True
    profile_rows = [
        clifford.simple_profile(5, 5) == clifford.SimpleProfile(2, 4),
        clifford.simple_profile(4, 5) == clifford.SimpleProfile(1, 4),
        clifford.simple_profile(3, 5) == clifford.SimpleProfile(2, 2),
        clifford.simple_profile(2, 5) == clifford.SimpleProfile(1, 2),
        clifford.fat_profile(5) == clifford.FatProfile(1, 4),
        clifford.fat_profile(4) == clifford.FatProfile(2, 2),
        clifford.fat_profile(3) == clifford.FatProfile(1, 2),
        clifford.fat_profile(2) == clifford.FatProfile(2, 1),
    ]
    details["profile_rows"] = all(profile_rows)
    ok &= all(profile_rows)

    rng = np.random.default_rng(seed)
    cases = []
    for _ in range(50):
        n = int(rng.integers(2, 6))
        k = int(rng.integers(0, n + 1))
        s = rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
        cases.append((k, n, s @ s.T))

    def one(case):
        k, n, m = case
        reps = clifford.build_reps(m, k)
        prof = clifford.simple_profile(k, n)
        shape_ok = (len(reps.tuples) == prof.count
                    and reps.tuples[0][0].shape == (prof.dim, prof.dim))
        return reps.max_residual, shape_ok

    results = pmap(one, cases, threads)
    worst = max(r for r, _ in results)
    details["build_reps_worst_residual"] = worst
    details["build_reps_shapes"] = all(s for _, s in results)
    ok &= worst < 1e-9 and all(s for _, s in results)

    form = clifford.to_complex_form(clifford.example_form_dim3(1))
    pts = clifford.sample_rank_drop_points(form, 20, seed + 7)
    ranks = [clifford.symmetric_rank(form.specialize(list(p)), "float", 1e-8) for p in pts]
    details["dim3_det_zero_ranks"] = sorted(set(ranks))
    ok &= all(r <= 2 for r in ranks)
    return CheckResult("5-clifford-profiles", ok, details)


def criterion_6_sklyanin2(seed: int = 0, threads: int = 1) -> CheckResult:
    details = {}
    ok = True
    tol = DEFAULT_TOLERANCES

    elim = sklyanin2.eliminate_t()
    details["eliminate_check"] = elim.check
    details["cofactor"] = str(elim.cofactor)
    ok &= elim.check

    details["cprime_22"] = str(sklyanin2.cprime_residual(2, 2))
    ok &= sklyanin2.cprime_residual(2, 2) == 0
    indeterminate = sklyanin2.t_param(2, 2) is None
    details["t_22_indeterminate"] = indeterminate
    ok &= indeterminate

    points = sklyanin2.curve_points_on_grid()
    details["curve_points"] = [[cp.a, cp.b] for cp in points]
    ok &= len(points) >= 3

    def per_point(cp):
        pm = sklyanin2.point_module_check(cp, tol)
        strat = sklyanin2.stratify(cp, samples=5, seed=seed, tol=tol)
        ideal = sklyanin2.minor_ideal_checks(cp, tol)
        sec = sklyanin2.secant_check(cp, tol)
        return pm, strat, ideal, sec

    reports = pmap(per_point, points[:3], threads)
    pm_ok = strat_ok = ideal_ok = sec_ok = True
    for pm, strat, ideal, sec in reports:
        pm_ok &= pm.max_minor_residual < 1e-8 and pm.all_rank_two and pm.orbit_size == 25
        expected = {"generic": (5, 2, 4, 1, 4), "det-zero": (4, 1, 4, 2, 2),
                    "E-prime": (2, 1, 2, 2, 1)}
        for s in strat.strata:
            rank, sc, sd, fc, fm = expected[s.name]
            strat_ok &= all(r == rank for r in s.ranks)
            strat_ok &= (s.simple.count, s.simple.dim) == (sc, sd)
            strat_ok &= (s.fat.count, s.fat.multiplicity) == (fc, fm)
        ideal_ok &= ideal.deg6 and ideal.deg8
        sec_ok &= sec.residual < 1e-7 and abs(sec.lam) > 1e-12
    details["point_modules"] = pm_ok
    details["stratification"] = strat_ok
    details["minor_ideals"] = ideal_ok
    details["secant"] = sec_ok
    ok &= pm_ok and strat_ok and ideal_ok and sec_ok

    off = sklyanin2.minor_ideal_checks((0.0, 1.0), tol)
    details["deg6_off_curve"] = off.deg6
    ok &= not off.deg6

    centre = clifford.center_data(sklyanin2.q5_form(Fraction(1), Fraction(2)))
    details["detQ_x_degree"] = centre["x_degree"]
    ok &= centre["x_degree"] == 10

    return CheckResult("6-order2-sklyanin", ok, details)


def criterion_7_onedim(seed: int = 0, threads: int = 1) -> CheckResult:
    details = {}
    reps = sklyanin2.onedim_reps(sklyanin2.OrderTwoParams(5, (1, 2, 2)))
    details["count_122"] = len(reps)
    empty = sklyanin2.onedim_reps(sklyanin2.OrderTwoParams(5, (1, 1, 1)))
    details["count_111"] = len(empty)
    ok = len(reps) == 5 and len(empty) == 0
    return CheckResult("7-onedim-reps", ok, details)


def criterion_8_shioda(seed: int = 0, threads: int = 1) -> CheckResult:
    details = {}
    ok = True
    minors = shioda5.s15_minors()
    details["minor_count"] = len(minors)
    ok &= len(minors) == 10

    orbit_flags = pmap(lambda a: shioda5.ca_orbit_check(a).ok, (1, 2), threads)
    details["ca_orbits"] = all(orbit_flags)
    ok &= all(orbit_flags)

    tt = shioda5.two_torsion_check(20, seed)
    details["two_torsion_worst"] = tt.max_residual
    details["two_torsion_control"] = tt.control_residual
    ok &= tt.ok()

    sp = shioda5.singular_points_check()
    details["singular_points"] = sp.count
    details["singular_ok"] = sp.ok()
    ok &= sp.ok()

    cf = shioda5.cycle_fiber_equivalence()
    details["cycle_fiber"] = cf.ok()
    details["cusp_cycles"] = cf.cusp_cycles
    ok &= cf.ok()
    return CheckResult("8-shioda-s15", ok, details)


def criterion_9_determinism(seed: int = 0, threads: int = 1) -> CheckResult:
    """A representative numeric slice rerun with 1 and 4 workers must agree
    byte for byte once serialized."""
    def slice_report(workers: int) -> str:
        points = sklyanin2.curve_points_on_grid()
        def per_point(cp):
            pm = sklyanin2.point_module_check(cp)
            ideal = sklyanin2.minor_ideal_checks(cp)
            return {"t": [pm.t.real, pm.t.imag], "worst": pm.max_minor_residual,
                    "ranks": pm.ranks, "deg6": ideal.deg6, "deg8": ideal.deg8}
        reports = pmap(per_point, points, workers)
        return json.dumps(reports, sort_keys=True)

    one, four = slice_report(1), slice_report(4)
    ok = one == four
    return CheckResult("9-determinism", ok, {"bytes": len(one), "identical": ok})


CRITERIA: Dict[str, Callable[[int, int], CheckResult]] = {
    "1": criterion_1_heisenberg,
    "2": criterion_2_hilbert,
    "3": criterion_3_charseries,
    "4": criterion_4_koszul,
    "5": criterion_5_clifford,
    "6": criterion_6_sklyanin2,
    "7": criterion_7_onedim,
    "8": criterion_8_shioda,
    "9": criterion_9_determinism,
}


def run_selftest(seed: int = 0, threads: int = 1,
                 only: Optional[List[str]] = None) -> dict:
    results = []
    for key in sorted(CRITERIA):
        if only and key not in only:
            continue
        results.append(CRITERIA[key](seed, threads))
    return {
        "passed": all(r.passed for r in results),
        "criteria": [{"name": r.name, "passed": r.passed, "details": r.details}
                     for r in results],
    }
