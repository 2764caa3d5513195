from fractions import Fraction

import pytest

from tropdeg.errors import ZeroVectorError
from tropdeg.linalg import (
    INFINITE,
    QuotientLattice,
    coords_in_rows,
    frac_det,
    int_inverse,
    int_kernel,
    lattice_index,
    primitive,
    rank,
    rref,
    saturate,
    snf,
)
from tropdeg.ops import Rng


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def check_snf(mat):
    d, u, v = snf(mat)
    assert mat_mul(mat_mul(u, mat), v) == d
    s, m = len(mat), len(mat[0])
    diag = [d[i][i] for i in range(min(s, m))]
    for i in range(s):
        for j in range(m):
            if i != j:
                assert d[i][j] == 0
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    assert abs(frac_det(u)) == 1
    assert abs(frac_det(v)) == 1
    return diag


def test_snf_examples():
    assert check_snf([[2, 0], [0, 3]]) == [1, 6]
    assert check_snf([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]
    assert check_snf([[4, 6]]) == [2]


def test_snf_randomized():
    rng = Rng(11)
    for _ in range(200):
        s = rng.randint(1, 5)
        m = rng.randint(1, 5)
        mat = [[rng.randint(-12, 12) for _ in range(m)] for _ in range(s)]
        check_snf(mat)


def test_lattice_index_examples():
    assert lattice_index([(2, 0), (0, 3)], 2) == 6
    assert lattice_index([(1, 0), (0, 1)], 2) == 1
    assert lattice_index([(1, 1), (1, -1)], 2) == 2
    assert lattice_index([(1, 1)], 2) is INFINITE


def test_lattice_index_matches_determinant():
    rng = Rng(5)
    for _ in range(100):
        m = rng.randint(1, 4)
        mat = [[rng.randint(-10, 10) for _ in range(m)] for _ in range(m)]
        det = frac_det(mat)
        idx = lattice_index(mat, m)
        if det == 0:
            assert idx is INFINITE
        else:
            assert idx == abs(det)


def test_saturate_examples():
    assert saturate([(2, 2)], 2) == ((1, 1),)
    assert set(saturate([(1, 0), (0, 1)], 2)) == {(1, 0), (0, 1)}
    assert saturate([(2, 4, 6)], 3) == ((1, 2, 3),)


def test_saturate_properties():
    rng = Rng(77)
    for _ in range(60):
        m = rng.randint(1, 5)
        k = rng.randint(1, m)
        gens = [tuple(rng.randint(-6, 6) for _ in range(m)) for _ in range(k)]
        gens = [g for g in gens if any(g)]
        sat = saturate(gens, m)
        assert len(sat) == rank(gens)
        # every generator is a rational combination of the basis
        for g in gens:
            assert coords_in_rows(sat, g) is not None
        # saturated: all elementary divisors of the basis are 1
        if sat:
            d, _, _ = snf(list(sat))
            assert all(d[i][i] == 1 for i in range(len(sat)))


def test_primitive():
    assert primitive((4, 6)) == (2, 3)
    assert primitive((0, -5)) == (0, -1)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    with pytest.raises(ZeroVectorError):
        primitive((0, 0))


def test_int_kernel_is_saturated():
    rows = [(1, 2, 3)]
    kern = int_kernel(rows, 3)
    assert len(kern) == 2
    for v in kern:
        assert sum(a * b for a, b in zip(rows[0], v)) == 0
    d, _, _ = snf(list(kern))
    assert all(d[i][i] == 1 for i in range(2))


def test_int_inverse():
    mat = [[1, 2], [0, 1]]
    assert int_inverse(mat) == [[1, -2], [0, 1]]


def test_quotient_lattice_roundtrip():
    q = QuotientLattice(((1, 1, 0),), 3)
    img = q.project((0, 1, 2))
    lifted = q.lift(img)
    assert q.project(lifted) == img


def test_rref_and_rank():
    red, piv = rref([(2, 4), (1, 2)])
    assert len(red) == 1 and piv == [0]
    assert rank([(1, 0), (0, 1), (1, 1)]) == 2
