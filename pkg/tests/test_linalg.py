import random
from fractions import Fraction

import numpy as np

from algtool.linalg import (RowSpace, mat_mul_exact, nullspace_exact,
                            rank_float, solve_exact, span_membership)


def test_rowspace_reduce_and_rank():
    space = RowSpace()
    assert space.insert({0: Fraction(1), 2: Fraction(2)})
    assert space.insert({1: Fraction(3)})
    assert not space.insert({0: Fraction(2), 1: Fraction(3), 2: Fraction(4)})
    assert space.rank == 2
    residue = space.reduce({0: Fraction(1), 3: Fraction(1)})
    assert set(residue) == {2, 3}


def test_rowspace_rref_rows_contain_no_foreign_pivots():
    rng = random.Random(0)
    space = RowSpace()
    for _ in range(30):
        vec = {rng.randint(0, 9): Fraction(rng.randint(-4, 4)) for _ in range(4)}
        vec = {k: v for k, v in vec.items() if v}
        if vec:
            space.insert(vec)
    pivots = set(space.rows)
    for pivot, row in space.rref_rows():
        assert row[pivot] == 1
        assert all(c == pivot or c not in pivots for c in row)


def test_rowspace_same_space_under_insertion_order():
    rng = random.Random(4)
    vecs = []
    for _ in range(12):
        vec = {rng.randint(0, 7): Fraction(rng.randint(-3, 3)) for _ in range(3)}
        vecs.append({k: v for k, v in vec.items() if v})
    s1, s2 = RowSpace(), RowSpace()
    for v in vecs:
        if v:
            s1.insert(dict(v))
    for v in reversed(vecs):
        if v:
            s2.insert(dict(v))
    assert s1.same_space(s2)


def test_solve_and_nullspace():
    cols = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]]
    sol = solve_exact(cols, [Fraction(3), Fraction(2)])
    assert sol == [Fraction(1), Fraction(2)]
    assert solve_exact([[Fraction(1), Fraction(0)]], [Fraction(0), Fraction(1)]) is None
    basis = nullspace_exact([[Fraction(1), Fraction(1), Fraction(0)]])
    assert len(basis) == 2
    for vec in basis:
        assert vec[0] + vec[1] == 0 or vec[2] == 1


def test_span_membership_exact():
    basis = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    member, coords = span_membership(basis, basis[0])
    assert member and coords == [Fraction(1), Fraction(0)]
    member, coords = span_membership([[Fraction(1), Fraction(0)]], [Fraction(0), Fraction(1)])
    assert not member and coords is None


def test_span_membership_float():
    basis = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]
    member, coords = span_membership(basis, [0.5, -2.0, 1e-12], "float", 1e-8)
    assert member
    member, _ = span_membership(basis, [0.0, 0.0, 1.0], "float", 1e-8)
    assert not member


def test_rank_float_scale_floor():
    rng = np.random.default_rng(0)
    noise = 1e-14 * rng.standard_normal((3, 3))
    assert rank_float(noise, 1e-8) == 3  # relative rank of pure noise
    assert rank_float(noise, 1e-8, scale=1.0) == 0


def test_mat_mul_exact():
    a = [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(1)]]
    b = [[Fraction(3)], [Fraction(4)]]
    assert mat_mul_exact(a, b) == [[Fraction(11)], [Fraction(4)]]
