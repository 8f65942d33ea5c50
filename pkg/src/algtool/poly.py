"""Sparse exact multivariate polynomials, polynomial matrices, determinants,
minors, partial derivatives, Sylvester resultants and exact division.

Coefficient fields: Q (Fraction), Q(w_p) (Cyclotomic) and, for the numeric
code paths, complex floats.  Terms are kept in a dict keyed by exponent
tuples; the serialization order is graded lexicographic, highest first, so
every text/JSON form is bit-stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclotomic import Cyclotomic, require_odd_prime
from .errors import ArityError, RingMismatchError

Exps = Tuple[int, ...]

FIELD_QQ = "QQ"
FIELD_QW = "QW"  # cyclotomic, needs ring.prime
FIELD_CC = "CC"


@dataclass(frozen=True)
class PolyRing:
    variables: Tuple[str, ...]
    field: str = FIELD_QQ
    prime: Optional[int] = None

    def __post_init__(self):
        if self.field not in (FIELD_QQ, FIELD_QW, FIELD_CC):
            raise ValueError(f"unknown field tag {self.field!r}")
        if self.field == FIELD_QW:
            if self.prime is None:
                raise ValueError("cyclotomic ring needs a prime")
            require_odd_prime(self.prime)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def coerce(self, c):
        if self.field == FIELD_QQ:
            if isinstance(c, Fraction):
                return c
            if isinstance(c, int):
                return Fraction(c)
            raise RingMismatchError(f"{c!r} is not a rational coefficient")
        if self.field == FIELD_QW:
            if isinstance(c, Cyclotomic):
                if c.p != self.prime:
                    raise RingMismatchError("cyclotomic prime mismatch")
                return c
            if isinstance(c, (int, Fraction)):
                return Cyclotomic.from_rational(self.prime, c)
            raise RingMismatchError(f"{c!r} is not a Q(w) coefficient")
        if isinstance(c, (int, float, complex, Fraction)):
            return complex(c)
        raise RingMismatchError(f"{c!r} is not a complex coefficient")

    def zero_scalar(self):
        return self.coerce(0)

    def one_scalar(self):
        return self.coerce(1)


def ring_q(variables: Sequence[str]) -> PolyRing:
    return PolyRing(tuple(variables), FIELD_QQ)


def ring_qw(variables: Sequence[str], p: int) -> PolyRing:
    return PolyRing(tuple(variables), FIELD_QW, p)


def ring_cc(variables: Sequence[str]) -> PolyRing:
    return PolyRing(tuple(variables), FIELD_CC)


def grlex_key(exps: Exps):
    return (-sum(exps), tuple(-e for e in exps))


def monomials_of_degree(nvars: int, degree: int) -> List[Exps]:
    """All exponent tuples of the given total degree, graded-lex order."""
    out = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort(key=grlex_key)
    return out


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Dict[Exps, object], _clean: bool = False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            cleaned = {}
            n = ring.nvars
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ArityError(f"monomial {exps} has wrong arity for {ring.variables}")
                c = ring.coerce(c)
                if c:
                    cleaned[tuple(exps)] = c
            self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: PolyRing) -> "MultiPoly":
        return cls(ring, {}, _clean=True)

    @classmethod
    def const(cls, ring: PolyRing, c) -> "MultiPoly":
        c = ring.coerce(c)
        if not c:
            return cls.zero(ring)
        return cls(ring, {(0,) * ring.nvars: c}, _clean=True)

    @classmethod
    def var(cls, ring: PolyRing, index: int, power: int = 1) -> "MultiPoly":
        if not 0 <= index < ring.nvars:
            raise ArityError(f"no variable {index} in {ring.variables}")
        exps = tuple(power if i == index else 0 for i in range(ring.nvars))
        return cls(ring, {exps: ring.one_scalar()}, _clean=True)

    @classmethod
    def monomial(cls, ring: PolyRing, exps: Exps, c=1) -> "MultiPoly":
        return cls(ring, {tuple(exps): c})

    # -- basics --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention here."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.zero_scalar())

    def _check_ring(self, other: "MultiPoly"):
        if self.ring != other.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, float, complex)):
            other = MultiPoly.const(self.ring, other)
        self._check_ring(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            cur = terms.get(e)
            new = c if cur is None else cur + c
            if new:
                terms[e] = new
            elif cur is not None:
                del terms[e]
        return MultiPoly(self.ring, terms, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, float, complex)):
            other = MultiPoly.const(self.ring, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic, float, complex)):
            c = self.ring.coerce(other)
            if not c:
                return MultiPoly.zero(self.ring)
            return MultiPoly(self.ring, {e: v * c for e, v in self.terms.items()}, _clean=True)
        self._check_ring(other)
        terms: Dict[Exps, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                cur = terms.get(e)
                new = c if cur is None else cur + c
                if new:
                    terms[e] = new
                elif cur is not None:
                    del terms[e]
        return MultiPoly(self.ring, terms, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = MultiPoly.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.const(self.ring, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items(), key=lambda t: grlex_key(t[0])))))

    # -- calculus / evaluation ------------------------------------------------

    def partial(self, var: int) -> "MultiPoly":
        if not 0 <= var < self.ring.nvars:
            raise ArityError(f"no variable {var}")
        terms: Dict[Exps, object] = {}
        for e, c in self.terms.items():
            k = e[var]
            if k == 0:
                continue
            e2 = tuple(v - 1 if i == var else v for i, v in enumerate(e))
            nc = c * k
            cur = terms.get(e2)
            terms[e2] = nc if cur is None else cur + nc
        return MultiPoly(self.ring, {e: c for e, c in terms.items() if c}, _clean=True)

    def eval(self, point: Sequence):
        """Evaluate at a point; scalar kind follows the point entries."""
        if len(point) != self.ring.nvars:
            raise ArityError(f"point has {len(point)} coordinates, ring has {self.ring.nvars}")
        if not self.terms:
            return 0 * point[0] if point else self.ring.zero_scalar()
        # power tables per variable
        maxdeg = [0] * self.ring.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k > maxdeg[i]:
                    maxdeg[i] = k
        powers = []
        for i, x in enumerate(point):
            row = [1]
            for _ in range(maxdeg[i]):
                row.append(row[-1] * x)
            powers.append(row)
        acc = None
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * powers[i][k]
            acc = term if acc is None else acc + term
        return acc

    # -- views ------------------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[Exps, object]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def leading_term(self) -> Tuple[Exps, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = min(self.terms, key=grlex_key)
        return e, self.terms[e]

    def coeffs_in_var(self, var: int) -> List["MultiPoly"]:
        """Coefficients [c_0, ..., c_d] of self as a polynomial in var."""
        d = self.degree_in(var)
        if d < 0:
            return [MultiPoly.zero(self.ring)]
        buckets: List[Dict[Exps, object]] = [{} for _ in range(d + 1)]
        for e, c in self.terms.items():
            k = e[var]
            e2 = tuple(0 if i == var else v for i, v in enumerate(e))
            buckets[k][e2] = buckets[k].get(e2, self.ring.zero_scalar()) + c
        return [MultiPoly(self.ring, {e: c for e, c in b.items() if c}, _clean=True)
                for b in buckets]

    def coefficient_vector(self, basis: Sequence[Exps]) -> list:
        """Coefficients against an explicit monomial basis (missing -> error)."""
        index = {e: i for i, e in enumerate(basis)}
        vec = [self.ring.zero_scalar()] * len(basis)
        for e, c in self.terms.items():
            if e not in index:
                raise ValueError(f"monomial {e} outside the given basis")
            vec[index[e]] = c
        return vec

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [f"{self.ring.variables[i]}^{k}" for i, k in enumerate(e) if k]
            if factors:
                parts.append(f"{c} * " + " ".join(factors))
            else:
                parts.append(f"{c}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({', '.join(self.ring.variables)}; {self})"


# -- division -------------------------------------------------------------------


def exact_divide(f: MultiPoly, g: MultiPoly) -> Optional[MultiPoly]:
    """Quotient q with f = q*g exactly, or None when g does not divide f.

    Graded-lex leading-term division: whenever f = q*g, the leading term of
    the running remainder stays divisible by the leading term of g, so the
    loop either finishes with remainder 0 or proves non-divisibility.  The
    result is re-verified by multiplication.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.ring != g.ring:
        raise RingMismatchError("exact_divide needs a common ring")
    if f.ring.field == FIELD_CC:
        raise RingMismatchError("exact division is only defined over exact fields")
    q_terms: Dict[Exps, object] = {}
    rem = f
    ge, gc = g.leading_term()
    while rem.terms:
        fe, fc = rem.leading_term()
        diff = tuple(a - b for a, b in zip(fe, ge))
        if any(d < 0 for d in diff):
            return None
        coeff = fc / gc
        q_terms[diff] = coeff
        rem = rem - MultiPoly.monomial(f.ring, diff, coeff) * g
    q = MultiPoly(f.ring, q_terms)
    if (q * g - f).terms:
        raise ArithmeticError("exact division verification failed")
    return q


# -- polynomial matrices -----------------------------------------------------------


class PolyMatrix:
    __slots__ = ("rows", "cols", "entries", "ring")

    def __init__(self, rows: int, cols: int, entries: Sequence[MultiPoly]):
        if rows <= 0 or cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        ring = entries[0].ring
        for e in entries:
            if e.ring != ring:
                raise RingMismatchError("matrix entries over mixed rings")
        self.rows, self.cols, self.entries, self.ring = rows, cols, entries, ring

    def at(self, i: int, j: int) -> MultiPoly:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[MultiPoly]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.cols, self.rows,
                          [self.at(i, j) for j in range(self.cols) for i in range(self.rows)])

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(len(row_idx), len(col_idx),
                          [self.at(i, j) for i in row_idx for j in col_idx])

    def eval(self, point: Sequence) -> List[list]:
        return [[self.at(i, j).eval(point) for j in range(self.cols)]
                for i in range(self.rows)]

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self.at(i, j) == self.at(j, i)
                   for i in range(self.rows) for j in range(i + 1, self.cols))


def _det_cofactor(m: PolyMatrix) -> MultiPoly:
    n = m.rows
    cache: Dict[Tuple[int, Tuple[int, ...]], MultiPoly] = {}

    def rec(r: int, cols: Tuple[int, ...]) -> MultiPoly:
        if not cols:
            return MultiPoly.const(m.ring, 1)
        key = (r, cols)
        hit = cache.get(key)
        if hit is not None:
            return hit
        acc = MultiPoly.zero(m.ring)
        for idx, c in enumerate(cols):
            entry = m.at(r, c)
            if entry.is_zero():
                continue
            sub = rec(r + 1, cols[:idx] + cols[idx + 1:])
            piece = entry * sub
            acc = acc + piece if idx % 2 == 0 else acc - piece
        cache[key] = acc
        return acc

    return rec(0, tuple(range(n)))


def _det_bareiss(m: PolyMatrix) -> MultiPoly:
    n = m.rows
    a = [[m.at(i, j) for j in range(n)] for i in range(n)]
    sign = 1
    prev = MultiPoly.const(m.ring, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly.zero(m.ring)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if k == 0:
                    a[i][j] = num
                else:
                    q = exact_divide(num, prev)
                    if q is None:
                        raise ArithmeticError("Bareiss division was not exact")
                    a[i][j] = q
            a[i][k] = MultiPoly.zero(m.ring)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def mat_det(m: PolyMatrix) -> MultiPoly:
    if m.rows != m.cols:
        raise ValueError(f"determinant of a {m.rows}x{m.cols} matrix")
    if m.rows > 8:
        raise ValueError("determinants are only supported up to size 8")
    if m.rows <= 5 or m.ring.field == FIELD_CC:
        return _det_cofactor(m)
    return _det_bareiss(m)


def mat_minors(m: PolyMatrix, k: int) -> List[MultiPoly]:
    """All k x k minors, row subsets then column subsets, lexicographic."""
    if not 1 <= k <= min(m.rows, m.cols):
        raise ValueError(f"minor size {k} out of range for {m.rows}x{m.cols}")
    out = []
    for ri in itertools.combinations(range(m.rows), k):
        for ci in itertools.combinations(range(m.cols), k):
            out.append(mat_det(m.submatrix(ri, ci)))
    return out


def resultant(f: MultiPoly, g: MultiPoly, var: int) -> MultiPoly:
    """Determinant of the Sylvester matrix in `var`, f-rows first."""
    df, dg = f.degree_in(var), g.degree_in(var)
    if df < 1 or dg < 1:
        raise ValueError("resultant needs positive degree in the eliminated variable")
    fc = f.coeffs_in_var(var)
    gc = g.coeffs_in_var(var)
    size = df + dg
    zero = MultiPoly.zero(f.ring)
    rows: List[List[MultiPoly]] = []
    for shift in range(dg):
        row = [zero] * size
        for i, c in enumerate(reversed(fc)):  # leading coefficient first
            row[shift + i] = c
        rows.append(row)
    for shift in range(df):
        row = [zero] * size
        for i, c in enumerate(reversed(gc)):
            row[shift + i] = c
        rows.append(row)
    return mat_det(PolyMatrix(size, size, [e for row in rows for e in row]))


# -- functional wrappers ------------------------------------------------------------


def poly_arith(kind: str, f: MultiPoly, g: MultiPoly) -> MultiPoly:
    if kind == "add":
        return f + g
    if kind == "sub":
        return f - g
    if kind == "mul":
        return f * g
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def poly_eval(f: MultiPoly, point: Sequence):
    return f.eval(point)


def poly_partial(f: MultiPoly, var: int) -> MultiPoly:
    return f.partial(var)


# -- serialization ------------------------------------------------------------------


def scalar_to_json(c):
    if isinstance(c, Fraction):
        return [str(c.numerator), str(c.denominator)]
    if isinstance(c, Cyclotomic):
        return {"p": c.p, "coeffs": [[str(q.numerator), str(q.denominator)] for q in c.coeffs]}
    if isinstance(c, complex):
        return [c.real, c.imag]
    if isinstance(c, int):
        return [str(c), "1"]
    raise TypeError(f"cannot serialize scalar {c!r}")


def poly_to_json(f: MultiPoly) -> dict:
    return {
        "vars": list(f.ring.variables),
        "field": f.ring.field if f.ring.field != FIELD_QW else f"QW{f.ring.prime}",
        "terms": [{"exps": list(e), "coeff": scalar_to_json(c)} for e, c in f.sorted_terms()],
    }
