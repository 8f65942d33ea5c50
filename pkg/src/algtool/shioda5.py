"""Determinantal geometry of the projected Shioda surface for p = 5.

S15 is cut out of P^4 by the ten 3x3 minors of

    [ x0^2    x1^2    x2^2    x3^2    x4^2  ]
    [ x2 x3   x3 x4   x4 x0   x0 x1   x1 x2 ]
    [ x1 x4   x2 x0   x3 x1   x4 x2   x0 x3 ]

(column i holds x_i^2, x_{2+i} x_{3+i}, x_{1+i} x_{4+i}).  All membership
checks on Heisenberg orbits and fixed points are exact over Q(w_5); floats
only enter through Jacobian ranks and the 2-torsion sextic's roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import SamplingError
from .gradedalg import (Presentation, hilbert, make_presentation,
                        make_relation, word_to_index)
from .heisenberg import (HeisenbergElement, SimpleRep, apply_element,
                         normalize_projective, projective_fixed_points,
                         subgroup_generators)
from .linalg import RowSpace, rank_float
from .poly import MultiPoly, PolyMatrix, mat_minors, ring_q

X_VARS = ("x0", "x1", "x2", "x3", "x4")
_REP = SimpleRep(5, 1)


def s15_matrix() -> PolyMatrix:
    ring = ring_q(X_VARS)
    x = [MultiPoly.var(ring, i) for i in range(5)]
    entries = []
    entries.extend(x[i] * x[i] for i in range(5))
    entries.extend(x[(2 + i) % 5] * x[(3 + i) % 5] for i in range(5))
    entries.extend(x[(1 + i) % 5] * x[(4 + i) % 5] for i in range(5))
    return PolyMatrix(3, 5, entries)


def s15_minors() -> List[MultiPoly]:
    """The ten degree-6 minors, in column-set lexicographic order."""
    return mat_minors(s15_matrix(), 3)


def ca_relations(a) -> List[MultiPoly]:
    """a x_i^2 + a^2 x_{i+1} x_{i-1} - x_{i+2} x_{i-2} for i = 0..4."""
    ring = ring_q(X_VARS)
    a = Fraction(a)
    x = [MultiPoly.var(ring, i) for i in range(5)]
    return [a * x[i] ** 2 + a * a * x[(i + 1) % 5] * x[(i - 1) % 5]
            - x[(i + 2) % 5] * x[(i - 2) % 5] for i in range(5)]


def base_orbit(a) -> List[Tuple[Cyclotomic, ...]]:
    """The 25 exact Heisenberg images of O_a = (0 : 1 : a : -a : -1)."""
    a = Fraction(a)
    point = tuple(Cyclotomic.from_rational(5, v) for v in (0, 1, a, -a, -1))
    orbit = []
    for aa in range(5):
        for bb in range(5):
            g = HeisenbergElement(5, aa, bb, 0)
            orbit.append(apply_element(_REP, g, point))
    return orbit


@dataclass
class OrbitReport:
    a: Fraction
    points: int
    relations_ok: bool
    minors_ok: bool

    @property
    def ok(self) -> bool:
        return self.relations_ok and self.minors_ok


def ca_orbit_check(a) -> OrbitReport:
    """Exact check that the whole orbit of O_a satisfies the C_a relations
    and lies on S15."""
    rels = ca_relations(a)
    minors = s15_minors()
    orbit = base_orbit(a)
    rel_ok = all(r.eval(list(pt)).is_zero() for pt in orbit for r in rels)
    min_ok = all(m.eval(list(pt)).is_zero() for pt in orbit for m in minors)
    return OrbitReport(Fraction(a), len(orbit), rel_ok, min_ok)


# -- 2-torsion sextic -----------------------------------------------------------


@dataclass
class TwoTorsionReport:
    samples: int
    roots_checked: int
    max_residual: float
    control_residual: float

    def ok(self, tol: float = 1e-7, control_floor: float = 1e-5) -> bool:
        return self.max_residual < tol and self.control_residual > control_floor


def two_torsion_check(samples: int = 20, seed: int = 0) -> TwoTorsionReport:
    """Random (x1, x2); roots x0 of the plane sextic
    x0^4 x1 x2 - x0^2 x1^2 x2^2 - x0 (x1^5 + x2^5) + 2 x1^3 x2^3 give points
    (x0 : x1 : x2 : x2 : x1) on S15 (all ten minors vanish numerically)."""
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = np.random.default_rng(seed)
    minors = s15_minors()
    worst = 0.0
    control = float("inf")
    count = 0
    for _ in range(samples):
        x1, x2 = rng.standard_normal(2)
        if abs(x1 * x2) < 1e-3:  # keep the quartic well-conditioned
            x1, x2 = x1 + 1.0, x2 - 1.0
        coeffs = [x1 * x2, 0.0, -(x1 ** 2) * x2 ** 2, -(x1 ** 5 + x2 ** 5),
                  2 * x1 ** 3 * x2 ** 3]
        roots = np.roots(coeffs)
        if len(roots) != 4:
            raise SamplingError("quartic lost roots")
        for x0 in roots:
            point = np.array([x0, x1, x2, x2, x1], dtype=complex)
            point = point / np.abs(point).max()
            residual = max(abs(m.eval(list(point))) for m in minors)
            worst = max(worst, residual)
            count += 1
        # negative control: nudge one root off the sextic
        bad = np.array([roots[0] + 1e-2, x1, x2, x2, x1], dtype=complex)
        bad = bad / np.abs(bad).max()
        control = min(control, max(abs(m.eval(list(bad))) for m in minors))
    return TwoTorsionReport(samples, count, worst, control)


# -- the 30 singular points -------------------------------------------------------


def thirty_points() -> List[Tuple[Cyclotomic, ...]]:
    """Fixed points of the p+1 projectivized cyclic subgroups, deduplicated;
    exactly 30 points for p = 5."""
    seen: Dict[tuple, Tuple[Cyclotomic, ...]] = {}
    for g in subgroup_generators(5):
        for pt in projective_fixed_points(_REP, g):
            key = tuple((c.p,) + c.coeffs for c in pt)
            seen.setdefault(key, pt)
    return list(seen.values())


@dataclass
class SingularPointsReport:
    count: int
    on_surface: bool
    singular_ranks: List[int]
    control_ranks: List[int]

    def ok(self) -> bool:
        return (self.count == 30 and self.on_surface
                and all(r < 2 for r in self.singular_ranks)
                and all(r == 2 for r in self.control_ranks))


def singular_points_check(tol: float = 1e-8) -> SingularPointsReport:
    """The 30 stabilizer points lie on S15 exactly and the 10x5 Jacobian of
    the minors drops below rank 2 there; at smooth orbit points of C_1 the
    rank is exactly 2 (codimension of the surface)."""
    minors = s15_minors()
    partials = [[m.partial(j) for j in range(5)] for m in minors]
    points = thirty_points()
    on_surface = all(m.eval(list(pt)).is_zero() for pt in points for m in minors)

    def jac_rank(complex_pt) -> int:
        jac = [[complex(row[j].eval(complex_pt)) for j in range(5)] for row in partials]
        # points are normalized and the minors have O(1) coefficients, so a
        # genuinely nonzero Jacobian is O(1); floor the SVD cutoff there
        return rank_float(jac, tol, scale=1.0)

    singular_ranks = []
    for pt in points:
        cpt = [c.embed(1) for c in pt]
        scale = max(abs(v) for v in cpt)
        singular_ranks.append(jac_rank([v / scale for v in cpt]))

    control_ranks = []
    for pt in base_orbit(1)[:10]:
        cpt = [c.embed(1) for c in pt]
        scale = max(abs(v) for v in cpt)
        control_ranks.append(jac_rank([v / scale for v in cpt]))

    return SingularPointsReport(len(points), on_surface, singular_ranks, control_ranks)


# -- cusp fiber vs cycle of lines ---------------------------------------------------


def _relation_space(pres: Presentation) -> RowSpace:
    space = RowSpace()
    for rel in pres.relations:
        space.insert({word_to_index(w, pres.p): c for w, c in rel})
    return space


def _relabeled_space(pres: Presentation, unit: int) -> RowSpace:
    """Relation span after the index substitution x_i -> x_(unit * i)."""
    space = RowSpace()
    for rel in pres.relations:
        vec = {}
        for (i, j), c in rel:
            vec[word_to_index(((unit * i) % 5, (unit * j) % 5), 5)] = c
        space.insert(vec)
    return space


@dataclass
class CycleFiberReport:
    span_equal_direct: bool      # (A:B) = (1:0) fiber, no relabeling
    span_equal_relabeled: bool   # (A:B) = (0:1) fiber after x_i -> x_{2i}
    hilbert: List[int]
    cusp_cycles: int

    def ok(self) -> bool:
        return (self.span_equal_direct and self.span_equal_relabeled
                and self.hilbert == [1, 5, 10, 15] and self.cusp_cycles == 12)


def cycle_fiber_equivalence() -> CycleFiberReport:
    cycle = make_presentation("cycle", 5)
    cycle_space = _relation_space(cycle)

    # (1:0) fiber: commutators + x_{i+1} x_{i-1}
    raw = [make_relation([((i, j), Fraction(1)), ((j, i), Fraction(-1))])
           for i in range(5) for j in range(i + 1, 5)]
    raw += [make_relation([(((i + 1) % 5, (i - 1) % 5), Fraction(1))]) for i in range(5)]
    fiber10 = Presentation(5, "QQ", tuple(raw), "fiber", (Fraction(1), Fraction(0)))
    direct = _relation_space(fiber10).same_space(cycle_space)

    # (0:1) fiber: commutators + x_{i+2} x_{i-2}; x_i -> x_{2i} maps it to the cycle
    fiber01 = make_presentation("curveCa", 0)
    relabeled = _relabeled_space(fiber01, 2).same_space(cycle_space)

    return CycleFiberReport(direct, relabeled, hilbert(cycle, 3), count_cusp_cycles())


def count_cusp_cycles() -> int:
    """Distinct H_5-orbits of line cycles through the fixed points of the six
    projectivized subgroups, one cycle per step k in {1, 2}."""
    cycles = set()
    for g in subgroup_generators(5):
        # a complement h moves the 5 fixed points of g in a single orbit
        h = HeisenbergElement(5, 0, 1, 0) if g.a else HeisenbergElement(5, 1, 0, 0)
        anchor = projective_fixed_points(_REP, g)[0]
        track = [anchor]
        for _ in range(4):
            track.append(normalize_projective(apply_element(_REP, h, track[-1])))
        keys = [tuple((c.p,) + c.coeffs for c in pt) for pt in track]
        for step in (1, 2):
            lines = frozenset(frozenset((keys[j], keys[(j + step) % 5])) for j in range(5))
            cycles.add(lines)
    return len(cycles)
