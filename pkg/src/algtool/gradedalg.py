"""Degreewise computation of graded quotients T(V)/I for Heisenberg-stable
relation sets: ideal degree pieces, Hilbert coefficients and character series.

Words of length n over the p generators are encoded big-endian in base p.
The degree-n ideal piece is built incrementally,

    I_n = V . I_{n-1} + I_{n-1} . V  (+ relations of degree n),

as a sparse reduced row-echelon space.  Since rho(g) is monomial, g acts on
words by an index shift and a root-of-unity phase, and the trace of g on I_n
reads off one coefficient per echelon row; the degree-n character of the
quotient is then chi_V(g)^n - tr(g | I_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .config import check_degree_allowed
from .cyclotomic import Cyclotomic, require_odd_prime
from .errors import ModulusError, StabilityError
from .heisenberg import HeisenbergElement, SimpleRep, conjugacy_classes
from .linalg import RowSpace

Word = Tuple[int, ...]
Relation = Tuple[Tuple[Word, object], ...]  # sorted ((word, coeff), ...)


@dataclass(frozen=True)
class Presentation:
    """Graded algebra T(V)/(relations), V of dimension p, relations given as
    homogeneous tensors: maps from words over {0..p-1} to coefficients."""

    p: int
    field: str  # "QQ" or "QW"
    relations: Tuple[Relation, ...]
    kind: str = "custom"
    params: Tuple = ()

    def __post_init__(self):
        require_odd_prime(self.p)
        for rel in self.relations:
            if not rel:
                raise ValueError("empty relation")
            degrees = {len(w) for w, _ in rel}
            if len(degrees) != 1:
                raise ValueError(f"inhomogeneous relation {rel}")
            if min(degrees) < 2:
                raise ValueError("relations must have degree >= 2")

    def one(self):
        return Fraction(1) if self.field == "QQ" else Cyclotomic.from_rational(self.p, 1)

    def relation_degree(self) -> int:
        return max(len(next(iter(rel))[0]) for rel in self.relations)

    def is_quadratic(self) -> bool:
        return all(len(next(iter(rel))[0]) == 2 for rel in self.relations)

    def label(self) -> str:
        if self.kind == "custom":
            return f"custom(p={self.p}, {len(self.relations)} relations)"
        inner = ":".join(str(x) for x in self.params)
        return f"{self.kind}({inner})" if inner else f"{self.kind}(p={self.p})"


def make_relation(pairs: Sequence[Tuple[Word, object]]) -> Relation:
    acc: Dict[Word, object] = {}
    for w, c in pairs:
        w = tuple(w)
        cur = acc.get(w)
        new = c if cur is None else cur + c
        if new:
            acc[w] = new
        elif cur is not None:
            del acc[w]
    if not acc:
        raise ValueError("relation cancels to zero")
    return tuple(sorted(acc.items()))


def word_to_index(word: Word, p: int) -> int:
    idx = 0
    for d in word:
        idx = idx * p + (d % p)
    return idx


def index_digits(idx: int, p: int, n: int) -> Word:
    digits = [0] * n
    for pos in range(n - 1, -1, -1):
        idx, digits[pos] = divmod(idx, p)
    return tuple(digits)


@dataclass
class DegreePiece:
    degree: int
    ideal_rank: int
    quotient_dim: int
    space: RowSpace
    p: int

    def ideal_basis(self):
        """Rows of the reduced row-echelon basis, (pivot, sparse row) pairs."""
        return self.space.rref_rows()

    def normal_indices(self) -> List[int]:
        pivots = set(self.space.rows)
        return [i for i in range(self.p ** self.degree) if i not in pivots]


_PIECES: Dict[Tuple[Presentation, int], DegreePiece] = {}
_SHIFT_TABLES: Dict[Tuple[int, int, int], List[int]] = {}
_DIGITSUM_TABLES: Dict[Tuple[int, int], List[int]] = {}


def clear_cache() -> None:
    _PIECES.clear()
    _SHIFT_TABLES.clear()
    _DIGITSUM_TABLES.clear()


def _shift_table(p: int, n: int, a: int) -> List[int]:
    """Index permutation of words under digitwise +a (mod p)."""
    key = (p, n, a % p)
    table = _SHIFT_TABLES.get(key)
    if table is None:
        table = [word_to_index(tuple((d + a) % p for d in index_digits(i, p, n)), p)
                 for i in range(p ** n)]
        _SHIFT_TABLES[key] = table
    return table


def _digitsum_table(p: int, n: int) -> List[int]:
    key = (p, n)
    table = _DIGITSUM_TABLES.get(key)
    if table is None:
        table = [sum(index_digits(i, p, n)) % p for i in range(p ** n)]
        _DIGITSUM_TABLES[key] = table
    return table


def ideal_piece(pres: Presentation, n: int, cap: Optional[int] = None) -> DegreePiece:
    if n < 0:
        raise ValueError("degree must be non-negative")
    check_degree_allowed(pres.p, n, cap)
    key = (pres, n)
    hit = _PIECES.get(key)
    if hit is not None:
        return hit
    p = pres.p
    space = RowSpace()
    if n >= 2:
        prev = ideal_piece(pres, n - 1, cap)
        shift = p ** (n - 1)
        for pivot in sorted(prev.space.rows):
            row = prev.space.rows[pivot]
            for g in range(p):
                space.insert({g * shift + idx: c for idx, c in row.items()})
            for g in range(p):
                space.insert({idx * p + g: c for idx, c in row.items()})
        for rel in pres.relations:
            if len(next(iter(rel))[0]) == n:
                space.insert({word_to_index(w, p): c for w, c in rel})
    piece = DegreePiece(n, space.rank, p ** n - space.rank, space, p)
    _PIECES[key] = piece
    return piece


def hilbert(pres: Presentation, max_degree: int, cap: Optional[int] = None) -> List[int]:
    return [ideal_piece(pres, n, cap).quotient_dim for n in range(max_degree + 1)]


# -- group action -----------------------------------------------------------------


def check_stability(pres: Presentation, g: HeisenbergElement, rep: SimpleRep) -> None:
    """Relations must span a g-stable subspace in their degree."""
    if g.p != pres.p or rep.p != pres.p:
        raise ModulusError("presentation, element and representation must share p")
    p = pres.p
    degrees = sorted({len(next(iter(rel))[0]) for rel in pres.relations})
    for d in degrees:
        rel_space = RowSpace()
        vecs = []
        for rel in pres.relations:
            if len(next(iter(rel))[0]) != d:
                continue
            vec = {word_to_index(w, p): c for w, c in rel}
            vecs.append(vec)
            rel_space.insert(vec)
        shift = _shift_table(p, d, -g.a)
        digitsum = _digitsum_table(p, d)
        for vec in vecs:
            image: Dict[int, object] = {}
            for idx, c in vec.items():
                phase = (rep.index * (d * g.k + g.b * digitsum[idx])) % p
                image[shift[idx]] = Cyclotomic.zeta(p, phase) * c
            if not rel_space.contains(image):
                raise StabilityError(
                    f"relations of {pres.label()} are not stable under {g.label()}"
                )


def ideal_trace(pres: Presentation, g: HeisenbergElement, rep: SimpleRep, n: int,
                cap: Optional[int] = None) -> Cyclotomic:
    """Trace of g acting on I_n, read off the echelon basis.

    In reduced echelon form no row contains another row's pivot column, so
    the coordinate of g.row_c along row_c is just the image's value at c:
    the row's own value at the a-shifted pivot index times the phase.
    """
    p = pres.p
    piece = ideal_piece(pres, n, cap)
    if n == 0 or piece.ideal_rank == 0:
        return Cyclotomic(p)
    unshift = _shift_table(p, n, g.a)  # preimage of column c under digitwise -a
    digitsum = _digitsum_table(p, n)
    total = Cyclotomic(p)
    i = rep.index
    for c, row in piece.space.rows.items():
        src = unshift[c]
        v = row.get(src)
        if v:
            phase = (i * (n * g.k + g.b * digitsum[src])) % p
            total = total + Cyclotomic.zeta(p, phase) * v
    return total


def quotient_trace(pres: Presentation, g: HeisenbergElement, rep: SimpleRep, n: int,
                   cap: Optional[int] = None) -> Cyclotomic:
    """Trace of g on A_n computed on the normal-word basis of the quotient
    (independent cross-check of chi_V(g)^n - ideal_trace)."""
    p = pres.p
    piece = ideal_piece(pres, n, cap)
    shift_back = _shift_table(p, n, -g.a)
    digitsum = _digitsum_table(p, n)
    one = pres.one()
    total = Cyclotomic(p)
    i = rep.index
    for w in piece.normal_indices():
        src = w  # phase is carried by the original word
        target = shift_back[w]
        residue = piece.space.reduce({target: one}) if target in piece.space.rows \
            else {target: one}
        v = residue.get(w)
        if v:
            phase = (i * (n * g.k + g.b * digitsum[src])) % p
            total = total + Cyclotomic.zeta(p, phase) * v
    return total


def character_coeffs(pres: Presentation, g: HeisenbergElement, rep: SimpleRep,
                     max_degree: int, cap: Optional[int] = None) -> List[Cyclotomic]:
    """Coefficients of the character series of g on A = T(V)/I up to t^N."""
    check_stability(pres, g, rep)
    p = pres.p
    out = []
    for n in range(max_degree + 1):
        if n == 0:
            out.append(Cyclotomic.from_rational(p, 1))
            continue
        if g.is_central():
            chi_vn = Cyclotomic.zeta(p, rep.index * g.k * n) * Fraction(p) ** n
        else:
            chi_vn = Cyclotomic(p)
        out.append(chi_vn - ideal_trace(pres, g, rep, n, cap))
    return out


@dataclass
class CharacterTable:
    p: int
    rep_index: int
    max_degree: int
    rows: Tuple[Tuple[str, Tuple[Cyclotomic, ...]], ...]  # (class label, coeffs)
    kind: str = "custom"
    params: Tuple = ()

    def row(self, label: str) -> Tuple[Cyclotomic, ...]:
        for lab, coeffs in self.rows:
            if lab == label:
                return coeffs
        raise KeyError(label)

    def hilbert_row(self) -> List[int]:
        coeffs = self.row("1")
        return [int(c.rational_value()) for c in coeffs]

    def same_series(self, other: "CharacterTable") -> bool:
        if (self.p, self.rep_index, self.max_degree) != (other.p, other.rep_index, other.max_degree):
            return False
        return all(a == b for (la, a), (lb, b) in zip(self.rows, other.rows)
                   if la == lb) and len(self.rows) == len(other.rows)

    def to_json(self) -> dict:
        from .poly import scalar_to_json
        return {
            "kind": self.kind,
            "params": [str(x) for x in self.params],
            "p": self.p,
            "rep": self.rep_index,
            "N": self.max_degree,
            "hilbert": self.hilbert_row(),
            "classes": [
                {"rep": label, "coeffs": [scalar_to_json(c) for c in coeffs]}
                for label, coeffs in self.rows
            ],
        }


def character_table(pres: Presentation, rep: SimpleRep, max_degree: int,
                    cap: Optional[int] = None) -> CharacterTable:
    rows = []
    for g, _size in conjugacy_classes(pres.p):
        coeffs = character_coeffs(pres, g, rep, max_degree, cap)
        rows.append((g.label(), tuple(coeffs)))
    return CharacterTable(pres.p, rep.index, max_degree, tuple(rows),
                          pres.kind, pres.params)


# -- catalog of presentations ------------------------------------------------------


def _coerce_params(values) -> Tuple[object, ...]:
    out = []
    for v in values:
        if isinstance(v, Cyclotomic):
            out.append(v)
        else:
            out.append(Fraction(v))
    return tuple(out)


def _field_of(params: Tuple) -> str:
    return "QW" if any(isinstance(v, Cyclotomic) for v in params) else "QQ"


def _finalize(p: int, field: str, raw: List[List[Tuple[Word, object]]],
              kind: str, params: Tuple) -> Presentation:
    """Coerce every relation coefficient into the presentation's field."""
    rels = []
    for pairs in raw:
        coerced = []
        for w, c in pairs:
            if field == "QW" and not isinstance(c, Cyclotomic):
                c = Cyclotomic.from_rational(p, c)
            coerced.append((w, c))
        rels.append(make_relation(coerced))
    return Presentation(p, field, tuple(rels), kind, params)


def _commutators(p: int) -> List[List[Tuple[Word, object]]]:
    rels = []
    for i in range(p):
        for j in range(i + 1, p):
            rels.append([((i, j), Fraction(1)), ((j, i), Fraction(-1))])
    return rels


def make_presentation(kind: str, *args, **kwargs) -> Presentation:
    """Catalog of presentations:

    - polynomial(p): commutator relations of C[V].
    - cycle(p), p >= 5: coordinate ring of the cycle of p lines.
    - sklyanin3(a, b, c): a x1 x2 + b x2 x1 + c x0^2 orbit, p = 3.
    - cliffordC(p, (a0, ..., a_{(p-1)/2})): a0 {x_{i+k}, x_{-i+k}} = a_i x_k^2.
    - sklyanin5(a, b): {x_{1+k}, x_{4+k}} = a x_k^2, {x_{2+k}, x_{3+k}} = b x_k^2.
    - curveCa(a): quadrics of the elliptic normal curve C_a plus commutators, p = 5.
    """
    if kind == "polynomial":
        (p,) = args or (kwargs.pop("p"),)
        return _finalize(p, "QQ", _commutators(p), "polynomial", (p,))

    if kind == "cycle":
        (p,) = args or (kwargs.pop("p"),)
        require_odd_prime(p)
        if p < 5:
            raise ValueError("cycle presentation needs p >= 5")
        raw = _commutators(p)
        for i in range(1, (p - 3) // 2 + 1):
            for k in range(p):
                raw.append([(((i + k) % p, (-i + k) % p), Fraction(1))])
        return _finalize(p, "QQ", raw, "cycle", (p,))

    if kind == "sklyanin3":
        a, b, c = _coerce_params(args if args else kwargs.pop("params"))
        raw = []
        for k in range(3):
            # e1-orbit of a x1 x2 + b x2 x1 + c x0^2 (indices shift by -k)
            raw.append([
                (((1 - k) % 3, (2 - k) % 3), a),
                (((2 - k) % 3, (1 - k) % 3), b),
                (((0 - k) % 3, (0 - k) % 3), c),
            ])
        return _finalize(3, _field_of((a, b, c)), raw, "sklyanin3", (a, b, c))

    if kind == "cliffordC":
        p = args[0] if args else kwargs.pop("p")
        avec = _coerce_params(args[1] if len(args) > 1 else kwargs.pop("params"))
        require_odd_prime(p)
        if len(avec) != (p + 1) // 2:
            raise ValueError(f"cliffordC over p={p} needs {(p + 1) // 2} parameters")
        a0 = avec[0]
        raw = []
        for i in range(1, (p - 1) // 2 + 1):
            for k in range(p):
                raw.append([
                    (((i + k) % p, (-i + k) % p), a0),
                    (((-i + k) % p, (i + k) % p), a0),
                    ((k, k), -avec[i]),
                ])
        return _finalize(p, _field_of(avec), raw, "cliffordC", (p,) + avec)

    if kind == "sklyanin5":
        a, b = _coerce_params(args if args else kwargs.pop("params"))
        raw = []
        for k in range(5):
            raw.append([
                (((1 + k) % 5, (4 + k) % 5), Fraction(1)),
                (((4 + k) % 5, (1 + k) % 5), Fraction(1)),
                ((k, k), -a),
            ])
        for k in range(5):
            raw.append([
                (((2 + k) % 5, (3 + k) % 5), Fraction(1)),
                (((3 + k) % 5, (2 + k) % 5), Fraction(1)),
                ((k, k), -b),
            ])
        return _finalize(5, _field_of((a, b)), raw, "sklyanin5", (a, b))

    if kind == "curveCa":
        (a,) = _coerce_params(args if args else (kwargs.pop("a"),))
        raw = _commutators(5)
        for i in range(5):
            raw.append([
                ((i, i), a),
                (((i + 1) % 5, (i - 1) % 5), a * a),
                (((i + 2) % 5, (i - 2) % 5), Fraction(-1)),
            ])
        return _finalize(5, _field_of((a,)), raw, "curveCa", (a,))

    raise ValueError(f"unknown presentation kind {kind!r}")
