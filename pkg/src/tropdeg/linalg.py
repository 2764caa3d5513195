"""Exact integer and rational linear algebra over the ambient lattice Z^m.

Vectors are tuples (ints for lattice data, Fractions for affine data),
matrices are lists/tuples of row tuples, and every computation is exact.
Row convention throughout: a lattice or subspace is generated by the rows
of its basis matrix, and x @ M means sum_i x[i] * M[i].
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import InvariantError, ZeroVectorError

Vec = tuple[Fraction, ...]
IntVec = tuple[int, ...]

#: Sentinel returned by lattice_index when the generators are not full rank.
INFINITE = math.inf


def frac_vec(entries) -> Vec:
    return tuple(Fraction(e) for e in entries)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u):
    return tuple(-a for a in u)


def vscale(c, u):
    return tuple(c * a for a in u)


def vdot(u, v):
    return sum(a * b for a, b in zip(u, v, strict=True))


def is_zero_vec(u) -> bool:
    return all(a == 0 for a in u)


def gcd_list(xs: Sequence[int]) -> int:
    g = 0
    for x in xs:
        g = math.gcd(g, x)
    return g


def lcm_list(xs: Sequence[int]) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out


def primitive(v) -> IntVec:
    """The unique integer vector with coprime entries on the ray R>=0 * v."""
    fv = [Fraction(e) for e in v]
    if all(e == 0 for e in fv):
        raise ZeroVectorError("primitive() of the zero vector")
    den = lcm_list([e.denominator for e in fv])
    ints = [int(e * den) for e in fv]
    g = gcd_list(ints)
    return tuple(x // g for x in ints)


def scale_to_int(v) -> IntVec:
    """Clear denominators of a rational vector (orientation preserved)."""
    fv = [Fraction(e) for e in v]
    den = lcm_list([e.denominator for e in fv]) if fv else 1
    return tuple(int(e * den) for e in fv)


def identity_rows(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    cols = list(zip(*b))
    return [[vdot(row, col) for col in cols] for row in a]


def row_times_mat(x, mat):
    """x @ mat for a row vector x."""
    n = len(mat[0]) if mat else 0
    return tuple(sum(x[i] * mat[i][j] for i in range(len(x))) for j in range(n))


# ---------------------------------------------------------------------------
# rational elimination
# ---------------------------------------------------------------------------

def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    mat = [[Fraction(e) for e in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def coords_in_rows(basis_rows, target):
    """Coefficients c with sum_i c[i]*basis_rows[i] == target, or None.

    Free coefficients (for linearly dependent bases) are set to zero.
    """
    n = len(basis_rows)
    if n == 0:
        return () if all(Fraction(t) == 0 for t in target) else None
    m = len(target)
    aug = [[Fraction(basis_rows[j][i]) for j in range(n)] + [Fraction(target[i])]
           for i in range(m)]
    red, piv = rref(aug)
    coords = [Fraction(0)] * n
    for row, p in zip(red, piv):
        if p == n:
            return None
        coords[p] = row[n]
    # dependent bases leave free columns; verify the chosen solution
    for i in range(m):
        if sum(coords[j] * basis_rows[j][i] for j in range(n)) != target[i]:
            return None
    return tuple(coords)


def in_span(basis_rows, target) -> bool:
    return coords_in_rows(basis_rows, target) is not None


def frac_det(rows) -> Fraction:
    """Determinant of a square rational matrix (fraction-free enough at desk scale)."""
    mat = [[Fraction(e) for e in r] for r in rows]
    n = len(mat)
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if mat[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            mat[c], mat[pr] = mat[pr], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c] != 0:
                f = mat[i][c] * inv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return det


def int_inverse(mat) -> list[list[int]]:
    """Exact inverse of a unimodular integer matrix, as integers."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] +
           [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    red, piv = rref(aug)
    if piv != list(range(n)):
        raise InvariantError("matrix is singular")
    out = []
    for row in red:
        ints = []
        for x in row[n:]:
            if x.denominator != 1:
                raise InvariantError("matrix is not unimodular")
            ints.append(int(x))
        out.append(ints)
    return out


# ---------------------------------------------------------------------------
# Smith normal form and lattice computations
# ---------------------------------------------------------------------------

def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, s, t with s*a + t*b == g == gcd(a, b) >= 0.

    When one argument divides the other, the other coefficient is 0, so
    elimination transforms built from these never touch a clean column.
    """
    if a != 0 and b % a == 0:
        return (a, 1, 0) if a > 0 else (-a, -1, 0)
    if b != 0 and a % b == 0:
        return (b, 0, 1) if b > 0 else (-b, 0, -1)
    sa, sb = (1, -1)[a < 0], (1, -1)[b < 0]
    old_r, r = abs(a), abs(b)
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s * sa, old_t * sb


def snf(mat) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form with transforms.

    Returns (D, U, V) with U @ mat @ V == D, D diagonal with non-negative
    entries satisfying d1 | d2 | ..., and U, V unimodular.  Eliminations
    use 2x2 extended-gcd transforms, which keeps entries small.
    """
    s = len(mat)
    m = len(mat[0]) if s else 0
    A = [[int(e) for e in row] for row in mat]
    U = identity_rows(s)
    V = identity_rows(m)

    def rows_transform(i, j, a, b, c, d):
        # (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
        A[i], A[j] = [a * x + b * y for x, y in zip(A[i], A[j])], \
                     [c * x + d * y for x, y in zip(A[i], A[j])]
        U[i], U[j] = [a * x + b * y for x, y in zip(U[i], U[j])], \
                     [c * x + d * y for x, y in zip(U[i], U[j])]

    def cols_transform(i, j, a, b, c, d):
        # (col_i, col_j) <- (a*col_i + b*col_j, c*col_i + d*col_j)
        for M, n in ((A, s), (V, m)):
            for r in range(n):
                x, y = M[r][i], M[r][j]
                M[r][i], M[r][j] = a * x + b * y, c * x + d * y

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(s):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(m):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def row_neg(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(s, m):
        best = None
        for i in range(t, s):
            for j in range(t, m):
                if A[i][j] != 0 and (best is None
                                     or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            row_swap(t, best[0])
        if best[1] != t:
            col_swap(t, best[1])
        while True:
            for i in range(t + 1, s):
                if A[i][t] != 0:
                    a, b = A[t][t], A[i][t]
                    g, x, y = _xgcd(a, b)
                    rows_transform(t, i, x, y, -(b // g), a // g)
            for j in range(t + 1, m):
                if A[t][j] != 0:
                    a, b = A[t][t], A[t][j]
                    g, x, y = _xgcd(a, b)
                    cols_transform(t, j, x, y, -(b // g), a // g)
            if all(A[i][t] == 0 for i in range(t + 1, s)):
                # pivot must divide the remaining submatrix
                offender = None
                for i in range(t + 1, s):
                    for j in range(t + 1, m):
                        if A[i][j] % A[t][t] != 0:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                # absorb the offending row; the pivot shrinks to a divisor
                A[t] = [x + y for x, y in zip(A[t], A[offender])]
                U[t] = [x + y for x, y in zip(U[t], U[offender])]
        if A[t][t] < 0:
            row_neg(t)
        t += 1

    for i in range(min(s, m)):
        if A[i][i] < 0:
            row_neg(i)
    return A, U, V


def snf_diagonal(mat) -> list[int]:
    D, _, _ = snf(mat)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def int_kernel(rows, m: int) -> tuple[IntVec, ...]:
    """Basis of {x in Z^m : rows @ x == 0}; the result is a saturated lattice."""
    if not rows:
        return tuple(tuple(r) for r in identity_rows(m))
    D, _, V = snf(rows)
    diag = [D[i][i] for i in range(min(len(D), m))]
    r = sum(1 for d in diag if d != 0)
    basis = (tuple(V[i][j] for i in range(m)) for j in range(r, m))
    return tuple(_sign_normalized(b) for b in basis)


def _sign_normalized(vec: IntVec) -> IntVec:
    for x in vec:
        if x != 0:
            return vec if x > 0 else tuple(-e for e in vec)
    return vec


def lattice_index(gens, m: int):
    """Index [Z^m : L] of the lattice generated by integer vectors, or INFINITE."""
    gens = [tuple(int(e) for e in g) for g in gens if not is_zero_vec(g)]
    if not gens:
        return 1 if m == 0 else INFINITE
    diag = snf_diagonal(gens)
    nonzero = [d for d in diag if d != 0]
    if len(nonzero) < m:
        return INFINITE
    return math.prod(nonzero)


def saturate(gens, m: int) -> tuple[IntVec, ...]:
    """Basis of (Q-span of gens) intersected with Z^m."""
    rows = [primitive(g) for g in gens if not is_zero_vec(g)]
    if not rows:
        return ()
    perp = int_kernel(rows, m)
    if not perp:
        return tuple(tuple(r) for r in identity_rows(m))
    return int_kernel(perp, m)


def relative_lattice_index(ambient_basis, sub_gens):
    """Index of the lattice generated by sub_gens inside the lattice with the
    given basis (both living in a common Z^m); INFINITE if ranks differ."""
    k = len(ambient_basis)
    coords = []
    for g in sub_gens:
        c = coords_in_rows(ambient_basis, g)
        if c is None:
            raise InvariantError("generator outside the ambient lattice span")
        ints = []
        for x in c:
            if x.denominator != 1:
                raise InvariantError("generator not in the ambient lattice")
            ints.append(int(x))
        coords.append(tuple(ints))
    return lattice_index(coords, k)


class QuotientLattice:
    """Coordinates on Z^m / L for a saturated sublattice L (torsion-free quotient)."""

    def __init__(self, sat_basis, m: int):
        self.m = m
        self.k = len(sat_basis)
        if self.k == 0:
            self._V = None
            self._Vinv = None
            return
        D, _, V = snf(sat_basis)
        diag = [D[i][i] for i in range(min(len(D), m))]
        if any(d != 1 for d in diag[: self.k]):
            raise InvariantError("basis does not generate a saturated lattice")
        self._V = V
        self._Vinv = int_inverse(V)

    def project(self, x):
        """Image of x in the quotient, as a vector of length m - k."""
        if self.k == 0:
            return tuple(x)
        y = row_times_mat(x, self._V)
        return tuple(y[self.k:])

    def lift(self, w) -> IntVec:
        """An integer vector of Z^m mapping to w in the quotient."""
        if self.k == 0:
            return tuple(int(e) for e in w)
        full = (0,) * self.k + tuple(w)
        return tuple(int(e) for e in row_times_mat(full, self._Vinv))
