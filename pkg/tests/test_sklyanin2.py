from fractions import Fraction

import numpy as np
import pytest

from algtool.clifford import center_data
from algtool.cyclotomic import Cyclotomic
from algtool.errors import IndeterminateError, PoleError
from algtool.gradedalg import hilbert, make_presentation
from algtool.poly import MultiPoly
from algtool.sklyanin2 import (CurvePoint, OrderTwoParams, cprime_poly,
                               cprime_residual, curve_points_on_grid,
                               curve_singularity_report, eliminate_t,
                               minor_ideal_checks, onedim_reps, orbit_points,
                               point_module_check, q5_form, secant_check,
                               stratify, t_param)


def bisect_root(f, lo, hi, iters=80):
    assert f(lo) * f(hi) < 0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@pytest.fixture(scope="module")
def near_one_point():
    """The root of C'(1, b) in (0, 0.2), found by an independent bisection."""
    b = bisect_root(lambda b: b ** 5 - b ** 3 + 2 * b ** 2 - 8 * b + 1, 0.0, 0.2)
    return CurvePoint(1.0, b, cprime_residual(1.0, b))


def test_cprime_values():
    assert cprime_residual(2, 2) == 0
    assert cprime_residual(0, 0) == 0
    assert cprime_residual(1, 1) == -5
    assert cprime_residual(Fraction(2), Fraction(2)) == 0


def test_cprime_monomial_support_fixture():
    poly = cprime_poly()
    support = {exps: c for exps, c in poly.terms.items()}
    assert support == {
        (3, 3): Fraction(-1), (5, 0): Fraction(1), (0, 5): Fraction(1),
        (2, 2): Fraction(2), (1, 1): Fraction(-8),
    }


def test_t_param():
    assert t_param(2, 2) is None  # 0/0
    assert t_param(0, 1) == Fraction(-1) / Fraction(-4)
    with pytest.raises(PoleError):
        t_param(1.0, (-4 + 20 ** 0.5) / 2)  # denominator zero, numerator not
    cp = curve_points_on_grid()[0]
    assert isinstance(t_param(cp.a, cp.b), float)


def test_q5_form_entries():
    a, b = Fraction(3), Fraction(7)
    form = q5_form(a, b)
    ring = form.matrix.ring
    u = [MultiPoly.var(ring, i) for i in range(5)]
    assert form.matrix.is_symmetric()
    assert form.matrix.at(0, 0) == 2 * u[0]
    assert form.matrix.at(0, 1) == b * u[3]  # first row: 2u0, b u3, a u1, a u4, b u2
    assert form.matrix.at(0, 2) == a * u[1]
    assert form.matrix.at(0, 3) == a * u[4]
    assert form.matrix.at(0, 4) == b * u[2]
    assert q5_form(Fraction(0), Fraction(0)).determinant() == \
        32 * u[0] * u[1] * u[2] * u[3] * u[4]


def test_q5_form_roundtrip_with_presentation():
    a, b = Fraction(2), Fraction(5)
    form = q5_form(a, b)
    ring = form.matrix.ring
    u = [MultiPoly.var(ring, i) for i in range(5)]
    pres = make_presentation("sklyanin5", a, b)
    for rel in pres.relations:
        pairs = [(w, c) for w, c in rel if w[0] != w[1]]
        squares = [(w, c) for w, c in rel if w[0] == w[1]]
        assert len(pairs) == 2 and len(squares) == 1
        (i, j), coeff = pairs[0]
        assert coeff == 1
        (k, _), square_coeff = squares[0]
        assert form.matrix.at(i, j) == (-square_coeff) * u[k]


def test_detq_is_degree_10_in_x_grading():
    data = center_data(q5_form(Fraction(1), Fraction(2)))
    assert data["x_degree"] == 10
    assert data["det"].is_homogeneous()


def test_eliminate_t():
    res = eliminate_t()
    assert res.check
    assert res.cofactor is not None
    two = [Fraction(2), Fraction(2), Fraction(0)]
    assert res.resultant.eval(two) == 0
    one = [Fraction(1), Fraction(1), Fraction(0)]
    assert res.resultant.eval(one) != 0


def test_curve_points_on_default_grid():
    points = curve_points_on_grid()
    assert len(points) == 3
    for cp in points:
        assert abs(cprime_residual(cp.a, cp.b)) <= 1e-10
        assert t_param(cp.a, cp.b) is not None


def test_curve_point_validation():
    with pytest.raises(ValueError):
        CurvePoint(1.0, 1.0, cprime_residual(1.0, 1.0))  # -5, not on curve
    CurvePoint(Fraction(2), Fraction(2), Fraction(0))  # exact, accepted


def test_point_module_check(near_one_point):
    report = point_module_check(near_one_point)
    assert report.orbit_size == 25
    assert report.minor_count == 100
    assert report.max_minor_residual < 1e-8
    assert report.all_rank_two


def test_point_module_check_rejects_singular_parameter():
    with pytest.raises(IndeterminateError):
        point_module_check((2.0, 2.0))


def test_orbit_is_heisenberg_stable():
    t = 0.75 + 0.1j
    pts = orbit_points(t)
    assert len(pts) == 25
    assert len({tuple(np.round(np.asarray(p), 6)) for p in pts}) == 25


def test_stratify(near_one_point):
    report = stratify(near_one_point, samples=5, seed=3)
    generic = report.by_name("generic")
    assert all(r == 5 for r in generic.ranks)
    assert (generic.simple.count, generic.simple.dim) == (2, 4)
    assert (generic.fat.count, generic.fat.multiplicity) == (1, 4)
    drop = report.by_name("det-zero")
    assert all(r == 4 for r in drop.ranks)
    assert (drop.fat.count, drop.fat.multiplicity) == (2, 2)
    eprime = report.by_name("E-prime")
    assert all(r == 2 for r in eprime.ranks)
    assert (eprime.fat.count, eprime.fat.multiplicity) == (2, 1)  # 2 point modules


def test_minor_ideal_checks(near_one_point):
    report = minor_ideal_checks(near_one_point)
    assert report.deg6 and report.deg8
    assert report.minor3_span_dim == report.product_span_dim
    assert report.minor4_span_dim == report.qq_span_dim
    off = minor_ideal_checks((0.0, 1.0))
    assert not off.deg6


def test_secant_check(near_one_point):
    report = secant_check(near_one_point)
    assert report.residual < 1e-7
    assert abs(report.lam) > 1e-12
    assert report.jac_degree == 5 and report.det_degree == 5


def test_onedim_reps_122():
    reps = onedim_reps(OrderTwoParams(5, (1, 2, 2)))
    assert len(reps) == 5
    pres = make_presentation("cliffordC", 5, (1, 2, 2))
    roots = set()
    for tup in reps:
        assert tup[0] == 1
        roots.add(tup[1].coeffs)
        for rel in pres.relations:
            acc = Cyclotomic(5)
            for (w0, w1), coeff in rel:
                acc = acc + coeff * tup[w0] * tup[w1]
            assert acc.is_zero()
    assert len(roots) == 5  # one tuple per fifth root of unity


def test_onedim_reps_111_empty():
    assert onedim_reps(OrderTwoParams(5, (1, 1, 1))) == []


def test_onedim_reps_p3():
    assert len(onedim_reps(OrderTwoParams(3, (1, 2)))) == 3


def test_onedim_reps_errors():
    with pytest.raises(ValueError):
        onedim_reps(OrderTwoParams(5, (1, 0, 0)))
    with pytest.raises(ValueError):
        OrderTwoParams(5, (0, 0, 0))


def test_sklyanin5_hilbert_matches_polynomial_at_float_approximants():
    # rational approximants of sampled curve points; Hilbert only (character
    # rows with w need exact parameters and are covered by cliffordC tests)
    for cp in curve_points_on_grid((Fraction(1), Fraction(3, 2), Fraction(1, 2),
                                    Fraction(2), Fraction(5, 2))):
        a = Fraction(cp.a).limit_denominator(10 ** 6)
        b = Fraction(cp.b).limit_denominator(10 ** 6)
        pres = make_presentation("sklyanin5", a, b)
        assert hilbert(pres, 3) == [1, 5, 15, 35]


def test_clifford_table_matches_polynomial():
    from algtool.gradedalg import character_table
    from algtool.heisenberg import SimpleRep
    rep = SimpleRep(5, 1)
    poly_table = character_table(make_presentation("polynomial", 5), rep, 3)
    cl_table = character_table(make_presentation("cliffordC", 5, (1, 2, 3)), rep, 3)
    assert cl_table.same_series(poly_table)


def test_singularity_report_informational():
    report = curve_singularity_report()
    assert report["singular"] is True
    assert all(v == 0 for v in report["partials"])
