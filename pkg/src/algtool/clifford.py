"""Graded Clifford algebras from symmetric forms of central quadrics:
specialization, rank, representation profiles and explicit complex matrices.

The symmetric form M has entries linear in central degree-2 variables
y_1..y_n, so x-degrees double y-degrees throughout.  Rank at a point decides
everything: odd rank k gives two simple representations of dimension
2^((k-1)/2) and one fat point of multiplicity 2^((k-1)/2); even rank k gives
one simple representation of dimension 2^(k/2) and two fat points of
multiplicity 2^(k/2 - 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import ConditioningError, SamplingError
from .linalg import rank_float
from .poly import MultiPoly, PolyMatrix, mat_det, ring_cc, ring_q


@dataclass
class SymmetricForm:
    variables: Tuple[str, ...]     # central y-variable names
    matrix: PolyMatrix             # n x n, symmetric, entries linear in the y's

    def __post_init__(self):
        n = self.matrix.rows
        if self.matrix.cols != n:
            raise ValueError("symmetric form must be square")
        if not self.matrix.is_symmetric():
            raise ValueError("matrix is not symmetric")
        for e in self.matrix.entries:
            if e.terms and any(sum(exp) != 1 for exp in e.terms):
                raise ValueError("entries must be linear in the central variables")

    @property
    def size(self) -> int:
        return self.matrix.rows

    def determinant(self) -> MultiPoly:
        return mat_det(self.matrix)

    def specialize(self, point: Sequence):
        """Entrywise evaluation at central-variable values (exact or complex)."""
        if len(point) != len(self.variables):
            raise ValueError(f"need {len(self.variables)} coordinates")
        rows = self.matrix.eval(point)
        if isinstance(rows[0][0], complex):
            return np.array(rows, dtype=complex)
        return rows


def specialize_form(form: SymmetricForm, point: Sequence):
    return form.specialize(point)


def symmetric_rank(matrix, mode: str = "exact", tol: float = 1e-8) -> int:
    """Rank of a symmetric scalar matrix; exact row reduction or SVD count."""
    if isinstance(matrix, np.ndarray):
        rows = [list(r) for r in matrix]
    else:
        rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("rank of a non-square matrix")
    if mode == "float":
        a = np.asarray(rows, dtype=complex)
        if not np.allclose(a, a.T, atol=max(tol, 1e-12) * (np.abs(a).max() + 1.0)):
            raise ValueError("matrix is not symmetric")
        return rank_float(a, tol)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError("matrix is not symmetric")
    a = [list(r) for r in rows]
    rank = 0
    for c in range(n):
        pr = next((i for i in range(rank, n) if a[i][c]), None)
        if pr is None:
            continue
        a[rank], a[pr] = a[pr], a[rank]
        inv = 1 / a[rank][c]
        a[rank] = [v * inv for v in a[rank]]
        for i in range(n):
            if i != rank and a[i][c]:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[rank])]
        rank += 1
    return rank


# -- representation profiles -----------------------------------------------------


@dataclass(frozen=True)
class SimpleProfile:
    count: int
    dim: int


@dataclass(frozen=True)
class FatProfile:
    count: int
    multiplicity: int


@dataclass(frozen=True)
class RankProfile:
    rank: int
    simple: SimpleProfile
    fat: Optional[FatProfile]


def simple_profile(k: int, n: int) -> SimpleProfile:
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range for size {n}")
    if k % 2:
        return SimpleProfile(2, 2 ** ((k - 1) // 2))
    return SimpleProfile(1, 2 ** (k // 2))


def fat_profile(k: int) -> FatProfile:
    if k < 1:
        raise ValueError("no graded point at rank 0")
    if k % 2:
        return FatProfile(1, 2 ** ((k - 1) // 2))
    return FatProfile(2, 2 ** (k // 2 - 1))


def rank_profile(k: int, n: int) -> RankProfile:
    return RankProfile(k, simple_profile(k, n), fat_profile(k) if k >= 1 else None)


# -- explicit matrix representations -----------------------------------------------

_PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def standard_gammas(k: int) -> List[np.ndarray]:
    """k matrices of size 2^floor(k/2) with gamma_i gamma_j + gamma_j gamma_i
    = 2 delta_ij; the odd slot is the chirality product Z x ... x Z."""
    m = k // 2
    dim = 2 ** m
    gammas = []
    for j in range(m):
        for pauli in (_PAULI_X, _PAULI_Y):
            mat = np.eye(1, dtype=complex)
            for t in range(m):
                if t < j:
                    block = _PAULI_Z
                elif t == j:
                    block = pauli
                else:
                    block = np.eye(2, dtype=complex)
                mat = np.kron(mat, block)
            gammas.append(mat)
    if k % 2:
        mat = np.eye(1, dtype=complex)
        for _ in range(m):
            mat = np.kron(mat, _PAULI_Z)
        gammas.append(mat)
    assert all(g.shape == (dim, dim) for g in gammas)
    return gammas


def _symmetric_square_root_factors(m: np.ndarray, rank: int, tol: float) -> np.ndarray:
    """S with m = S S^T (n x rank), by congruence pivoting on directions u
    with u^T m u != 0; complex symmetric input."""
    n = m.shape[0]
    work = m.astype(complex).copy()
    scale = max(np.abs(m).max(), 1.0)
    cols = []
    for _ in range(rank):
        diag = np.abs(np.diag(work))
        i = int(np.argmax(diag))
        if diag[i] > tol * scale:
            u = np.zeros(n, dtype=complex)
            u[i] = 1.0
        else:
            off = np.abs(work)
            np.fill_diagonal(off, 0.0)
            j, l = np.unravel_index(int(np.argmax(off)), off.shape)
            if off[j, l] <= tol * scale:
                raise ConditioningError(
                    f"matrix ran out of pivots before reaching rank {rank}")
            u = np.zeros(n, dtype=complex)
            u[j] = 1.0
            u[l] = 1.0
        pivot = u @ work @ u
        if abs(pivot) <= tol * scale:
            raise ConditioningError("pivot vanished during factorization")
        v = (work @ u) / np.sqrt(pivot)
        cols.append(v)
        work = work - np.outer(v, v)
    if np.abs(work).max() > max(np.sqrt(tol), tol * 100) * scale:
        raise ConditioningError(
            f"residual {np.abs(work).max():.2e} after {rank} pivots; rank understated")
    return np.column_stack(cols) if cols else np.zeros((n, 0), dtype=complex)


@dataclass
class CliffordReps:
    tuples: List[List[np.ndarray]]
    chirality: List[complex]    # scalar of the diagonalized-generator product
    max_residual: float


def build_reps(matrix, rank: int, tol: float = 1e-9) -> CliffordReps:
    """Matrices X_1..X_n with X_i X_j + X_j X_i = M_ij * Id, dimension and
    count per simple_profile(rank); odd rank yields the two inequivalent
    choices (sign flip of the last diagonalized generator)."""
    m = np.asarray(matrix, dtype=complex)
    n = m.shape[0]
    if m.shape != (n, n) or not np.allclose(m, m.T, atol=1e-10 * (np.abs(m).max() + 1)):
        raise ValueError("build_reps needs a symmetric square matrix")
    profile = simple_profile(rank, n)
    factor_tol = max(tol, 1e-12)
    s = _symmetric_square_root_factors(m, rank, factor_tol)
    variants = [standard_gammas(rank)]
    if profile.count == 2:
        flipped = [g.copy() for g in standard_gammas(rank)]
        if rank:
            flipped[-1] = -flipped[-1]
        variants.append(flipped)
    dim = 2 ** (rank // 2)
    tuples = []
    chirality = []
    residual = 0.0
    scale = np.abs(m).max() + 1.0
    for gammas in variants:
        xs = []
        for i in range(n):
            x = np.zeros((dim, dim), dtype=complex)
            for r in range(rank):
                x += s[i, r] * gammas[r]
            xs.append(x / np.sqrt(2.0))
        top = np.eye(dim, dtype=complex)
        for g in gammas:
            top = top @ g
        chirality.append(complex(np.trace(top) / dim))
        for i in range(n):
            for j in range(n):
                err = np.linalg.norm(xs[i] @ xs[j] + xs[j] @ xs[i] - m[i, j] * np.eye(dim))
                residual = max(residual, err / scale)
        tuples.append(xs)
    return CliffordReps(tuples, chirality, residual)


# -- center ----------------------------------------------------------------------


def center_data(form: SymmetricForm) -> dict:
    det = form.determinant()
    n = form.size
    x_degree = 2 * det.total_degree()
    if n % 2:
        desc = (f"C[{', '.join(form.variables)}, g] with deg(g) = {n} "
                f"and g^2 = det(M)")
    else:
        desc = f"C[{', '.join(form.variables)}] (polynomial center)"
    return {"det": det, "x_degree": x_degree, "parity": "odd" if n % 2 else "even",
            "center": desc}


# -- forms of the catalog -----------------------------------------------------------


def example_form_dim3(t) -> SymmetricForm:
    """The 3-generator form [[2y1, t y3, t y2], [t y3, 2y2, t y1],
    [t y2, t y1, 2y3]] over Q[y1, y2, y3]."""
    ring = ring_q(("y1", "y2", "y3"))
    y = [MultiPoly.var(ring, i) for i in range(3)]
    t = Fraction(t)
    entries = [
        2 * y[0], t * y[2], t * y[1],
        t * y[2], 2 * y[1], t * y[0],
        t * y[1], t * y[0], 2 * y[2],
    ]
    return SymmetricForm(ring.variables, PolyMatrix(3, 3, entries))


def det_along_line(form_cc: SymmetricForm, base: np.ndarray, direction: np.ndarray) -> np.poly1d:
    """det M(base + s * direction) as a numpy polynomial in s."""
    ring = ring_cc(("s",))
    s_var = MultiPoly.var(ring, 0)
    entries = []
    for e in form_cc.matrix.entries:
        at_base = e.eval([complex(v) for v in base])
        slope = e.eval([complex(v) for v in direction])
        entries.append(MultiPoly.const(ring, at_base) + s_var * slope)
    det = mat_det(PolyMatrix(form_cc.size, form_cc.size, entries))
    deg = det.total_degree()
    coeffs = [0j] * (deg + 1)
    for exps, c in det.terms.items():
        coeffs[deg - exps[0]] = c
    return np.poly1d(coeffs)


def to_complex_form(form: SymmetricForm, subs: Optional[dict] = None) -> SymmetricForm:
    """Clone an exact form over CC (entries linear in the same variables)."""
    ring = ring_cc(form.variables)
    entries = []
    for e in form.matrix.entries:
        terms = {exps: complex(c) if not hasattr(c, "embed") else c.embed(1)
                 for exps, c in e.terms.items()}
        entries.append(MultiPoly(ring, terms))
    return SymmetricForm(ring.variables, PolyMatrix(form.matrix.rows, form.matrix.cols, entries))


def sample_rank_drop_points(form_cc: SymmetricForm, count: int, seed: int,
                            tol: float = 1e-8, retries: int = 40) -> List[np.ndarray]:
    """Points on V(det M) found by root-finding det along random complex lines."""
    rng = np.random.default_rng(seed)
    n_vars = len(form_cc.variables)
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > retries * max(count, 1):
            raise SamplingError("could not locate enough det-zero points")
        base = rng.standard_normal(n_vars) + 1j * rng.standard_normal(n_vars)
        direction = rng.standard_normal(n_vars) + 1j * rng.standard_normal(n_vars)
        poly = det_along_line(form_cc, base, direction)
        if poly.order < 1:
            continue
        roots = poly.r
        if len(roots) == 0:
            continue
        root = roots[int(np.argmin(np.abs(roots)))]
        point = base + root * direction
        norm = np.abs(point).max()
        if norm == 0 or not np.isfinite(norm):
            continue
        point = point / norm
        mat = form_cc.specialize(list(point))
        if abs(np.linalg.det(mat)) > np.sqrt(tol):
            continue
        out.append(point)
    return out
