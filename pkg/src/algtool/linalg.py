"""Sparse exact row reduction and float rank/span decisions.

`RowSpace` is the workhorse behind every degreewise ideal computation: an
incrementally built reduced row-echelon space of sparse vectors over an
exact field (Fraction or Cyclotomic coercible values, anything supporting
+, -, *, / and truthiness-as-nonzero).

Invariant maintained throughout: every stored row is normalized to pivot
coefficient 1 and contains no other pivot column.  Reducing a vector is then
a single ascending pass over its support, and the residue is the canonical
normal form modulo the row space (supported on non-pivot columns only).
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

SparseVec = Dict[int, object]


class RowSpace:
    def __init__(self):
        self.rows: Dict[int, SparseVec] = {}  # pivot col -> row
        self._col_index: Dict[int, set] = {}  # col -> pivot cols of rows using it

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivot_cols(self) -> List[int]:
        return sorted(self.rows)

    def reduce(self, vec: SparseVec) -> SparseVec:
        """Canonical residue of vec modulo the row space."""
        residue = {c: v for c, v in vec.items() if v}
        for c in sorted(residue):
            v = residue.get(c)
            if not v:
                continue
            row = self.rows.get(c)
            if row is None:
                continue
            del residue[c]
            for col, w in row.items():
                if col == c:
                    continue
                cur = residue.get(col)
                new = -v * w if cur is None else cur - v * w
                if new:
                    residue[col] = new
                elif cur is not None:
                    del residue[col]
        return residue

    def contains(self, vec: SparseVec) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: SparseVec) -> bool:
        """Add vec to the space; returns True when the rank grew."""
        residue = self.reduce(vec)
        if not residue:
            return False
        pivot = min(residue)
        inv = 1 / residue[pivot]
        row = {c: v * inv for c, v in residue.items()}
        # restore the RREF invariant in older rows
        for rc in list(self._col_index.get(pivot, ())):
            other = self.rows[rc]
            factor = other.pop(pivot)
            self._col_index[pivot].discard(rc)
            for col, w in row.items():
                if col == pivot:
                    continue
                cur = other.get(col)
                new = -factor * w if cur is None else cur - factor * w
                if new:
                    if cur is None:
                        self._col_index.setdefault(col, set()).add(rc)
                    other[col] = new
                elif cur is not None:
                    del other[col]
                    self._col_index[col].discard(rc)
        self.rows[pivot] = row
        for col in row:
            if col != pivot:
                self._col_index.setdefault(col, set()).add(pivot)
        return True

    def extend(self, vecs: Iterable[SparseVec]) -> int:
        added = 0
        for v in vecs:
            if self.insert(v):
                added += 1
        return added

    def rref_rows(self) -> List[Tuple[int, SparseVec]]:
        """Rows of the (unique) RREF basis, sorted by pivot column."""
        return [(c, dict(self.rows[c])) for c in sorted(self.rows)]

    def same_space(self, other: "RowSpace") -> bool:
        if self.rank != other.rank or sorted(self.rows) != sorted(other.rows):
            return False
        for c, row in self.rows.items():
            orow = other.rows[c]
            if len(row) != len(orow):
                return False
            for col, v in row.items():
                w = orow.get(col)
                if w is None or v != w:
                    return False
        return True


def solve_exact(columns: Sequence[Sequence], target: Sequence) -> Optional[list]:
    """Solve sum_j x_j * columns[j] = target over an exact field.

    Returns a solution with free variables set to 0, or None when the system
    is inconsistent.
    """
    m = len(target)
    n = len(columns)
    for col in columns:
        if len(col) != m:
            raise ValueError("column length mismatch")
    aug = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(m)]
    pivots = []  # (row, col)
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n]:
            return None
    zero = 0 * target[0] if m else 0
    sol = [zero] * n
    for row, col in pivots:
        sol[col] = aug[row][n]
    return sol


def nullspace_exact(rows: Sequence[Sequence]) -> List[list]:
    """Basis of the right nullspace of a dense exact matrix.

    Returns one vector per free column (RREF convention: free coordinate 1,
    pivot coordinates filled by back-substitution), in ascending free-column
    order.
    """
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    a = [list(r) for r in rows]
    pivots = []  # (row, col)
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(n) if c not in pivot_cols]
    zero = 0 * rows[0][0]
    one = zero + 1
    basis = []
    for fc in free_cols:
        vec = [zero] * n
        vec[fc] = one
        for row, col in pivots:
            vec[col] = -a[row][fc]
        basis.append(vec)
    return basis


def mat_mul_exact(a: Sequence[Sequence], b: Sequence[Sequence]) -> List[list]:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = None
            for t in range(k):
                if a[i][t] and b[t][j]:
                    term = a[i][t] * b[t][j]
                    acc = term if acc is None else acc + term
            row.append(acc if acc is not None else 0 * a[i][0])
        out.append(row)
    return out


def rank_float(matrix, tol: float = 1e-8, scale: Optional[float] = None) -> int:
    """Count of singular values above tol relative to the largest one.

    An all-noise matrix has no meaningful relative scale; passing `scale`
    floors the threshold at tol * scale (used when the inputs are normalized
    so that genuine nonzero data is O(scale))."""
    a = np.atleast_2d(np.asarray(matrix, dtype=complex))
    if a.size == 0:
        return 0
    sv = np.linalg.svd(a, compute_uv=False)
    top = sv[0] if len(sv) else 0.0
    if scale is not None:
        top = max(top, scale)
    if top == 0.0:
        return 0
    return int(np.sum(sv > tol * top))


def span_membership(basis: Sequence[Sequence], target: Sequence,
                    mode: str = "exact", tol: float = 1e-8):
    """Decide target in span(basis); returns (member, coordinates).

    Exact mode decides by row reduction and returns exact coordinates in the
    given basis (free variables 0).  Float mode decides by rank comparison
    with singular values >= tol (relative) treated nonzero, and returns a
    least-squares coordinate vector.
    """
    if any(len(b) != len(target) for b in basis):
        raise ValueError("vector length mismatch")
    if mode == "exact":
        if not basis:
            return (False, None) if any(target) else (True, [])
        coords = solve_exact([list(b) for b in basis], list(target))
        if coords is None:
            return False, None
        return True, coords
    if mode == "float":
        a = np.asarray([list(b) for b in basis], dtype=complex)
        t = np.asarray(list(target), dtype=complex)
        if a.size == 0:
            return bool(np.allclose(t, 0.0, atol=tol)), []
        r0 = rank_float(a, tol)
        r1 = rank_float(np.vstack([a, t]), tol)
        if r1 > r0:
            return False, None
        coords, *_ = np.linalg.lstsq(a.T, t, rcond=None)
        return True, coords.tolist()
    raise ValueError(f"unknown mode {mode!r}")
