import random

import pytest

from algtool.cyclotomic import Cyclotomic
from algtool.errors import ModulusError
from algtool.heisenberg import (HeisenbergElement, LinearCharacter, SimpleRep,
                                all_irreducibles, apply_element, character,
                                conjugacy_classes, h_mul, parse_element,
                                projective_fixed_points, rep_matrix,
                                subgroup_generators)
from algtool.linalg import mat_mul_exact


def random_element(rng, p):
    return HeisenbergElement(p, rng.randrange(p), rng.randrange(p), rng.randrange(p))


def test_commutation_rule():
    p = 5
    e1 = HeisenbergElement(p, 1, 0, 0)
    e2 = HeisenbergElement(p, 0, 1, 0)
    assert h_mul(e2, e1) == HeisenbergElement(p, 1, 1, p - 1)  # e2 e1 = e1 e2 z^(p-1)
    assert h_mul(e1, e2) == HeisenbergElement(p, 1, 1, 0)


def test_group_axioms():
    rng = random.Random(0)
    for p in (3, 5):
        identity = HeisenbergElement(p)
        e1 = HeisenbergElement(p, 1, 0, 0)
        assert e1 ** p == identity
        for _ in range(25):
            g, h, k = (random_element(rng, p) for _ in range(3))
            assert g * g.inverse() == identity
            assert (g * h) * k == g * (h * k)


def test_rep_matrix_is_homomorphism():
    rng = random.Random(1)
    for p, index in ((3, 1), (5, 2)):
        rep = SimpleRep(p, index)
        for _ in range(100 if p == 3 else 40):
            g, h = random_element(rng, p), random_element(rng, p)
            lhs = rep_matrix(rep, g * h)
            rhs = mat_mul_exact(rep_matrix(rep, g), rep_matrix(rep, h))
            assert lhs == rhs


def test_rep_matrix_shapes_and_characters():
    rep = SimpleRep(3, 1)
    e1 = rep_matrix(rep, HeisenbergElement(3, 1, 0, 0))
    # cyclic shift: x_c -> x_{c-1}, so row (c-1) column c is 1
    for c in range(3):
        assert e1[(c - 1) % 3][c] == 1
    z = rep_matrix(SimpleRep(5, 2), HeisenbergElement(5, 0, 0, 1))
    for i in range(5):
        assert z[i][i] == Cyclotomic.zeta(5, 2)

    rep5 = SimpleRep(5, 1)
    g = HeisenbergElement(5, 1, 1, 0)
    mat = rep_matrix(rep5, g)
    trace = sum((mat[i][i] for i in range(5)), Cyclotomic(5))
    assert trace.is_zero()
    assert character(rep5, g).is_zero()

    assert character(SimpleRep(3, 1), HeisenbergElement(3, 0, 0, 1)) == Cyclotomic.zeta(3) * 3
    assert character(SimpleRep(5, 1), HeisenbergElement(5)) == 5
    assert character(SimpleRep(5, 1), HeisenbergElement(5, 2, 1, 0)).is_zero()


def test_character_equals_matrix_trace():
    rng = random.Random(2)
    rep = SimpleRep(5, 3)
    for _ in range(20):
        g = random_element(rng, 5)
        mat = rep_matrix(rep, g)
        trace = sum((mat[i][i] for i in range(5)), Cyclotomic(5))
        assert trace == character(rep, g)


def test_conjugacy_classes():
    for p, count in ((3, 11), (5, 29)):
        classes = conjugacy_classes(p)
        assert len(classes) == count == p * p + p - 1
        assert sum(size for _, size in classes) == p ** 3
        central = [g for g, size in classes if size == 1]
        assert len(central) == p and all(g.is_central() for g in central)
    with pytest.raises(ModulusError):
        conjugacy_classes(4)


def test_character_table_orthogonality_p3():
    p = 3
    classes = conjugacy_classes(p)
    reps = all_irreducibles(p)
    assert len(reps) == p * p + p - 1
    for v in reps:
        for w in reps:
            acc = Cyclotomic(p)
            for g, size in classes:
                acc = acc + v.character(g) * w.character(g).conjugate() * size
            assert acc == (p ** 3 if v == w else 0)


def test_linear_characters():
    chi = LinearCharacter(5, 2, 3)
    assert chi.character(HeisenbergElement(5, 1, 0, 0)) == Cyclotomic.zeta(5, 2)
    assert chi.character(HeisenbergElement(5, 0, 0, 4)) == 1  # z acts trivially


def test_fixed_points_of_e2_are_coordinate_points():
    pts = projective_fixed_points(SimpleRep(5, 1), HeisenbergElement(5, 0, 1, 0))
    assert len(pts) == 5
    coords = {tuple(1 if i == j else 0 for i in range(5)) for j in range(5)}
    got = {tuple(1 if not c.is_zero() else 0 for c in pt) for pt in pts}
    assert got == coords


def test_fixed_points_of_e1_are_root_of_unity_columns():
    rep = SimpleRep(5, 1)
    g = HeisenbergElement(5, 1, 0, 0)
    mat = rep_matrix(rep, g)
    for pt in projective_fixed_points(rep, g):
        assert pt[0] == 1
        image = [sum((mat[r][c] * pt[c] for c in range(5)), Cyclotomic(5)) for r in range(5)]
        lam = image[0]  # eigenvalue, since pt[0] = 1
        assert [lam * v for v in pt] == image
        # coordinates follow the geometric pattern (1 : z : z^2 : z^3 : z^4)
        z = pt[1]
        assert pt[2] == z * z and pt[3] == z ** 3 and pt[4] == z ** 4


def test_fixed_points_agree_for_powers():
    rep = SimpleRep(5, 1)
    g = HeisenbergElement(5, 1, 2, 0)
    base = {tuple(c.coeffs for c in pt) for pt in projective_fixed_points(rep, g)}
    for j in (2, 3, 4):
        pow_set = {tuple(c.coeffs for c in pt)
                   for pt in projective_fixed_points(rep, g ** j)}
        assert pow_set == base


def test_thirty_distinct_fixed_points():
    rep = SimpleRep(5, 1)
    seen = set()
    for g in subgroup_generators(5):
        for pt in projective_fixed_points(rep, g):
            seen.add(tuple(c.coeffs for c in pt))
    assert len(seen) == 30


def test_central_element_rejected():
    with pytest.raises(ValueError):
        projective_fixed_points(SimpleRep(5, 1), HeisenbergElement(5, 0, 0, 2))


def test_parse_element():
    g = parse_element(5, "e1^2 e2 z^3")
    assert (g.a, g.b, g.k) == (2, 1, 3)
    assert parse_element(5, "1") == HeisenbergElement(5)


def test_apply_element_matches_matrix():
    rep = SimpleRep(5, 1)
    g = HeisenbergElement(5, 2, 3, 1)
    point = tuple(Cyclotomic.from_rational(5, v) for v in (1, 2, 0, -1, 3))
    mat = rep_matrix(rep, g)
    expected = [sum((mat[r][c] * point[c] for c in range(5)), Cyclotomic(5))
                for r in range(5)]
    assert list(apply_element(rep, g, point)) == expected
