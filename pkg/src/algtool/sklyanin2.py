"""The order-2 Sklyanin toolkit for p = 5: the quadratic form Q(a, b), the
parameter curve C', the t-parameter of the quotient elliptic curve, the
Sylvester elimination, point-module minor checks, rank stratification,
degree-piece span identities, the secant-variety determinant identity, and
exact 1-dimensional representation enumeration for Clifford parameters.

Conventions fixed here once:
  * u_i denotes the central degree-2 element x_i^2; Q lives over C[u_0..u_4].
  * q_i = t u_i^2 + t^2 u_{i+1} u_{i+4} - u_{i+2} u_{i+3} (indices mod 5) are
    the quadrics of the quotient curve E' = C_t in the u-coordinates.
  * The base point of E' is (0 : 1 : t : -t : -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .clifford import (SymmetricForm, fat_profile, sample_rank_drop_points,
                       simple_profile, symmetric_rank)
from .config import DEFAULT_TOLERANCES, Tolerances
from .cyclotomic import Cyclotomic
from .errors import IndeterminateError, PoleError, SamplingError
from .gradedalg import make_presentation
from .heisenberg import HeisenbergElement, SimpleRep, apply_element
from .linalg import rank_float, span_membership
from .poly import (MultiPoly, PolyMatrix, exact_divide, mat_det, mat_minors,
                   monomials_of_degree, resultant, ring_cc, ring_q)

Scalar = Union[int, Fraction, float, complex]

U_VARS = ("u0", "u1", "u2", "u3", "u4")


@dataclass(frozen=True)
class OrderTwoParams:
    """Projective Clifford parameters (a_0 : ... : a_{(p-1)/2})."""

    p: int
    avec: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "avec", tuple(Fraction(v) for v in self.avec))
        if len(self.avec) != (self.p + 1) // 2:
            raise ValueError(f"need {(self.p + 1) // 2} parameters for p={self.p}")
        if not any(self.avec):
            raise ValueError("parameter vector must be nonzero")


@dataclass(frozen=True)
class CurvePoint:
    a: Scalar
    b: Scalar
    residual: Scalar

    def __post_init__(self):
        if isinstance(self.residual, (int, Fraction)):
            if self.residual != 0:
                raise ValueError(f"exact point not on the curve: residual {self.residual}")
        elif abs(self.residual) > 1e-10:
            raise ValueError(f"point too far from the curve: residual {self.residual}")


def _is_exact(*values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def cprime_residual(a: Scalar, b: Scalar) -> Scalar:
    """-a^3 b^3 + a^5 + b^5 + 2 a^2 b^2 - 8 a b."""
    return -(a ** 3) * b ** 3 + a ** 5 + b ** 5 + 2 * a ** 2 * b ** 2 - 8 * a * b


def cprime_poly():
    ring = ring_q(("a", "b"))
    a, b = MultiPoly.var(ring, 0), MultiPoly.var(ring, 1)
    return cprime_residual(a, b)


def t_param(a: Scalar, b: Scalar, tol: float = 1e-12) -> Optional[Scalar]:
    """t = (a^3 b - b^3 - 2 a^2) / (a^4 - a b^2 - 4 b); None means 0/0."""
    num = a ** 3 * b - b ** 3 - 2 * a ** 2
    den = a ** 4 - a * b ** 2 - 4 * b
    if _is_exact(a, b):
        if den == 0:
            if num == 0:
                return None
            raise PoleError(f"t has a pole at ({a}, {b})")
        return Fraction(num) / Fraction(den)
    scale = max(abs(a), abs(b), 1.0)
    if abs(den) <= tol * scale ** 4:
        if abs(num) <= tol * scale ** 4:
            return None
        raise PoleError(f"t has a pole at ({a}, {b})")
    return num / den


def q5_form(a: Scalar, b: Scalar) -> SymmetricForm:
    """The 5x5 symmetric form: diagonal 2 u_k; {x_{1+k}, x_{4+k}} slots carry
    a u_k, {x_{2+k}, x_{3+k}} slots carry b u_k."""
    if _is_exact(a, b):
        ring = ring_q(U_VARS)
        a, b = Fraction(a), Fraction(b)
    else:
        ring = ring_cc(U_VARS)
        a, b = complex(a), complex(b)
    u = [MultiPoly.var(ring, i) for i in range(5)]
    entries = []
    for i in range(5):
        for j in range(5):
            if i == j:
                entries.append(2 * u[i])
            else:
                d = (j - i) % 5
                k = (3 * (i + j)) % 5  # midpoint: 2k = i + j mod 5
                entries.append((a if d in (2, 3) else b) * u[k])
    return SymmetricForm(U_VARS, PolyMatrix(5, 5, entries))


@dataclass
class EliminationResult:
    resultant: MultiPoly
    cofactor: Optional[MultiPoly]
    check: bool


def eliminate_t() -> EliminationResult:
    """Sylvester-eliminate t from -2b^2 t^3 + 2ab^2 t - 2a^2 and
    -a^2 b t^2 - a b^2 t + 2a^2; the result is exactly divisible by C'."""
    ring = ring_q(("a", "b", "t"))
    a, b, t = (MultiPoly.var(ring, i) for i in range(3))
    f = -2 * b ** 2 * t ** 3 + 2 * a * b ** 2 * t - 2 * a ** 2
    g = -(a ** 2) * b * t ** 2 - a * b ** 2 * t + 2 * a ** 2
    res = resultant(f, g, 2)
    cprime = -(a ** 3) * b ** 3 + a ** 5 + b ** 5 + 2 * a ** 2 * b ** 2 - 8 * a * b
    cof = exact_divide(res, cprime)
    return EliminationResult(res, cof, cof is not None)


# -- numeric curve points ------------------------------------------------------------


def curve_points_on_grid(grid: Sequence[Fraction] = (Fraction(1), Fraction(3, 2), Fraction(1, 2)),
                         bracket: float = 4.0, step: float = 0.05) -> List[CurvePoint]:
    """One numeric point of C' per grid value of a: scan [-bracket, bracket]
    for a sign change of b -> C'(a, b), bisect, then Newton-polish to ~1e-15.
    Roots with indeterminate or infinite t are skipped."""
    points = []
    for a_exact in grid:
        a = float(a_exact)

        def f(b: float) -> float:
            return -(a ** 3) * b ** 3 + a ** 5 + b ** 5 + 2 * a ** 2 * b ** 2 - 8 * a * b

        def fprime(b: float) -> float:
            return -3 * a ** 3 * b ** 2 + 5 * b ** 4 + 4 * a ** 2 * b - 8 * a

        roots = []
        lo = -bracket
        flo = f(lo)
        b = lo + step
        while b <= bracket + 1e-12:
            fb = f(b)
            if flo == 0.0:
                roots.append(lo)
            elif flo * fb < 0:
                x0, x1 = lo, b
                for _ in range(80):
                    mid = 0.5 * (x0 + x1)
                    if f(x0) * f(mid) <= 0:
                        x1 = mid
                    else:
                        x0 = mid
                root = 0.5 * (x0 + x1)
                for _ in range(8):
                    d = fprime(root)
                    if d == 0:
                        break
                    root -= f(root) / d
                roots.append(root)
            lo, flo = b, fb
            b += step
        for root in roots:
            try:
                t = t_param(a, root)
            except PoleError:
                continue
            if t is None or abs(root) < 1e-9:
                continue
            points.append(CurvePoint(a, root, cprime_residual(a, root)))
            break
    return points


def _as_ab(point) -> Tuple[Scalar, Scalar]:
    if isinstance(point, CurvePoint):
        return point.a, point.b
    a, b = point
    return a, b


def _require_t(a: Scalar, b: Scalar) -> complex:
    t = t_param(a, b)
    if t is None:
        raise IndeterminateError(
            f"t is 0/0 at ({a}, {b}); singular parameter, pick another curve point")
    return complex(t)


def base_point(t: complex) -> Tuple[complex, ...]:
    return (0j, 1 + 0j, t, -t, -1 + 0j)


def orbit_points(t: complex, dedup_tol: float = 1e-9) -> List[Tuple[complex, ...]]:
    """The 25 Heisenberg-orbit images of (0 : 1 : t : -t : -1) in u-space,
    projectively normalized and deduplicated."""
    rep = SimpleRep(5, 1)
    raw = []
    for aa in range(5):
        for bb in range(5):
            raw.append(apply_element(rep, HeisenbergElement(5, aa, bb, 0), base_point(t)))
    seen: List[Tuple[complex, ...]] = []
    for vec in raw:
        lead = next(v for v in vec if abs(v) > dedup_tol)
        norm = tuple(v / lead for v in vec)
        if not any(all(abs(x - y) <= dedup_tol * 10 for x, y in zip(norm, old))
                   for old in seen):
            seen.append(norm)
    return seen


@dataclass
class PointModuleReport:
    t: complex
    orbit_size: int
    minor_count: int
    max_minor_residual: float
    ranks: List[int]

    @property
    def all_rank_two(self) -> bool:
        return all(r == 2 for r in self.ranks)


def point_module_check(point, tol: Tolerances = DEFAULT_TOLERANCES) -> PointModuleReport:
    """Every 3x3 minor of Q(a, b) vanishes on the whole orbit of the base
    point of E', and the rank there is 2."""
    a, b = _as_ab(point)
    t = _require_t(a, b)
    form = q5_form(complex(a), complex(b))
    minors = mat_minors(form.matrix, 3)
    orbit = orbit_points(t)
    worst = 0.0
    ranks = []
    for pt in orbit:
        scale = max(abs(v) for v in pt)
        pt_n = [v / scale for v in pt]
        for m in minors:
            worst = max(worst, abs(m.eval(pt_n)))
        ranks.append(symmetric_rank(form.specialize(pt_n), "float", tol.rank))
    return PointModuleReport(t, len(orbit), len(minors), worst, ranks)


# -- stratification ------------------------------------------------------------------


@dataclass
class Stratum:
    name: str
    points: int
    ranks: List[int]
    simple: object
    fat: object


@dataclass
class StratificationReport:
    t: complex
    strata: List[Stratum]

    def by_name(self, name: str) -> Stratum:
        return next(s for s in self.strata if s.name == name)


def stratify(point, samples: int = 6, seed: int = 0,
             tol: Tolerances = DEFAULT_TOLERANCES) -> StratificationReport:
    """Rank profile of Q over (i) random points of P^4, (ii) points of
    V(det Q) off E', (iii) the E' orbit; expected ranks 5 / 4 / 2."""
    a, b = _as_ab(point)
    t = _require_t(a, b)
    form = q5_form(complex(a), complex(b))
    rng = np.random.default_rng(seed)

    generic_ranks = []
    for _ in range(samples):
        pt = rng.standard_normal(5) + 1j * rng.standard_normal(5)
        pt /= np.abs(pt).max()
        generic_ranks.append(symmetric_rank(form.specialize(list(pt)), "float", tol.rank))

    det_zero = sample_rank_drop_points(form, max(3, samples // 2), seed + 1, tol.rank)
    det_ranks = []
    for pt in det_zero:
        r = symmetric_rank(form.specialize(list(pt)), "float", tol.rank)
        if r == 2:  # accidentally hit E'; line roots are generic, retry-free skip
            continue
        det_ranks.append(r)
    if not det_ranks:
        raise SamplingError("no det-zero points off E' found")

    orbit_ranks = [symmetric_rank(form.specialize(list(pt)), "float", tol.rank)
                   for pt in orbit_points(t)]

    strata = [
        Stratum("generic", len(generic_ranks), generic_ranks,
                simple_profile(5, 5), fat_profile(5)),
        Stratum("det-zero", len(det_ranks), det_ranks,
                simple_profile(4, 5), fat_profile(4)),
        Stratum("E-prime", len(orbit_ranks), orbit_ranks,
                simple_profile(2, 5), fat_profile(2)),
    ]
    return StratificationReport(t, strata)


# -- degree-piece ideal checks --------------------------------------------------------


def ct_quadrics(t: complex):
    """q_i = t u_i^2 + t^2 u_{i+1} u_{i+4} - u_{i+2} u_{i+3} over CC."""
    ring = ring_cc(U_VARS)
    u = [MultiPoly.var(ring, i) for i in range(5)]
    out = []
    for i in range(5):
        out.append(t * u[i] ** 2 + t * t * u[(i + 1) % 5] * u[(i + 4) % 5]
                   - u[(i + 2) % 5] * u[(i + 3) % 5])
    return out


def _mutual_span(vexa: List[list], vexb: List[list], tol: float) -> bool:
    return (all(span_membership(vexb, v, "float", tol)[0] for v in vexa)
            and all(span_membership(vexa, v, "float", tol)[0] for v in vexb))


@dataclass
class MinorIdealReport:
    t: complex
    deg6: bool
    deg8: bool
    minor3_span_dim: int
    product_span_dim: int
    minor4_span_dim: int
    qq_span_dim: int


def minor_ideal_checks(point, tol: Tolerances = DEFAULT_TOLERANCES) -> MinorIdealReport:
    """deg6: span of the 100 cubic 3x3 minors equals span of the 25 products
    u_j q_i; deg8: span of the 25 quartic 4x4 minors equals span of the 15
    products q_i q_j."""
    a, b = _as_ab(point)
    t = _require_t(a, b)
    form = q5_form(complex(a), complex(b))
    ring = form.matrix.ring
    u = [MultiPoly.var(ring, i) for i in range(5)]
    quadrics = ct_quadrics(t)

    basis3 = monomials_of_degree(5, 3)
    minors3 = [m.coefficient_vector(basis3) for m in mat_minors(form.matrix, 3)]
    products = [(u[j] * q).coefficient_vector(basis3)
                for q in quadrics for j in range(5)]
    deg6 = _mutual_span(minors3, products, tol.span)

    basis4 = monomials_of_degree(5, 4)
    minors4 = [m.coefficient_vector(basis4) for m in mat_minors(form.matrix, 4)]
    qq = [(quadrics[i] * quadrics[j]).coefficient_vector(basis4)
          for i in range(5) for j in range(i, 5)]
    deg8 = _mutual_span(minors4, qq, tol.span)

    return MinorIdealReport(
        t, deg6, deg8,
        rank_float(minors3, tol.span), rank_float(products, tol.span),
        rank_float(minors4, tol.span), rank_float(qq, tol.span),
    )


# -- secant identity -----------------------------------------------------------------


@dataclass
class SecantReport:
    t: complex
    lam: complex
    residual: float
    jac_degree: int
    det_degree: int


def secant_check(point, tol: Tolerances = DEFAULT_TOLERANCES) -> SecantReport:
    """det(dQ_i/dz_j) of the quadrics Q_i = z_i^2 + t z_{i+1} z_{i+4}
    - (1/t) z_{i+2} z_{i+3} is proportional to det Q(a, b) with u := z."""
    a, b = _as_ab(point)
    t = _require_t(a, b)
    if abs(t) < 1e-12:
        raise ZeroDivisionError("secant identity needs t != 0")
    ring = ring_cc(U_VARS)
    z = [MultiPoly.var(ring, i) for i in range(5)]
    quadrics = [z[i] ** 2 + t * z[(i + 1) % 5] * z[(i + 4) % 5]
                - (1.0 / t) * z[(i + 2) % 5] * z[(i + 3) % 5] for i in range(5)]
    jac_entries = [q.partial(j) for q in quadrics for j in range(5)]
    jac_det = mat_det(PolyMatrix(5, 5, jac_entries))
    det_q = q5_form(complex(a), complex(b)).determinant()

    basis = monomials_of_degree(5, 5)
    jv = np.asarray(jac_det.coefficient_vector(basis), dtype=complex)
    dv = np.asarray(det_q.coefficient_vector(basis), dtype=complex)
    lam = complex(np.vdot(dv, jv) / np.vdot(dv, dv))
    residual = float(np.linalg.norm(jv - lam * dv) / np.linalg.norm(jv))
    return SecantReport(t, lam, residual, jac_det.total_degree(), det_q.total_degree())


# -- 1-dimensional representations ----------------------------------------------------


def onedim_reps(params: OrderTwoParams) -> List[Tuple[Cyclotomic, ...]]:
    """All scalar representations with y_0 = 1 of the Clifford presentation
    C(a_0 : ... : a_{(p-1)/2}), over Q(w_p); every returned tuple satisfies
    every defining relation exactly."""
    p = params.p
    avec = params.avec
    half = (p - 1) // 2
    i0 = next((i for i in range(1, half + 1) if avec[i]), None)
    if i0 is None:
        raise ValueError("need some a_i != 0 with i >= 1")
    if avec[0] == 0:
        return []
    c = Cyclotomic.from_rational(p, Fraction(avec[i0], 2 * avec[0]))
    s_base = (c.inverse()) ** half  # c^(-(p-1)/2)
    pres = make_presentation("cliffordC", p, avec)
    found = []
    for j in range(p):
        s = s_base * Cyclotomic.zeta(p, j)
        y: List[Optional[Cyclotomic]] = [None] * p
        for k in range(p):
            y[(k * i0) % p] = (c ** comb(k, 2)) * (s ** k)
        assert all(v is not None for v in y)
        ok = True
        for rel in pres.relations:
            acc = Cyclotomic(p)
            for (w0, w1), coeff in rel:
                acc = acc + coeff * y[w0] * y[w1]
            if not acc.is_zero():
                ok = False
                break
        if ok:
            found.append(tuple(y))
    return found


# -- informational curve geometry ------------------------------------------------------


def curve_singularity_report() -> dict:
    """Partials of the projective closure of C' at (2 : 2 : 1); informational
    (the homogenization convention is ours, degree 6 with variable c)."""
    ring = ring_q(("a", "b", "c"))
    a, b, c = (MultiPoly.var(ring, i) for i in range(3))
    closure = (-(a ** 3) * b ** 3 + a ** 5 * c + b ** 5 * c
               + 2 * a ** 2 * b ** 2 * c ** 2 - 8 * a * b * c ** 4)
    at = [Fraction(2), Fraction(2), Fraction(1)]
    partials = [closure.partial(i).eval(at) for i in range(3)]
    return {
        "closure": closure,
        "point": "(2 : 2 : 1)",
        "partials": partials,
        "singular": all(v == 0 for v in partials),
    }
