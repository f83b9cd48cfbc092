"""Small exact linear algebra helpers on tuple-of-tuple matrices.

Row convention throughout: vectors are rows, and a matrix M acts on a row
vector v as v @ M.  Row i of M is the image of the i-th basis vector.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import IntegrityError


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def vec_mat(v, m):
    """Row vector times matrix."""
    cols = range(len(m[0]))
    return tuple(sum(v[i] * m[i][k] for i in range(len(v))) for k in cols)


def mat_mul(a, b):
    cols = range(len(b[0]))
    return tuple(
        tuple(sum(row[k] * b[k][j] for k in range(len(b))) for j in cols)
        for row in a
    )


def transpose(m):
    return tuple(zip(*m))


def det_int(m):
    """Determinant of an integer matrix, fraction-free Bareiss elimination."""
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def inverse_frac(m):
    """Exact inverse via Gauss-Jordan over Fraction.  Raises on singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            raise IntegrityError("matrix is singular")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


def inverse_unimodular(m):
    """Inverse of an integer matrix with determinant +-1, as integers."""
    inv = inverse_frac(m)
    out = []
    for row in inv:
        ints = []
        for x in row:
            if x.denominator != 1:
                raise IntegrityError("matrix inverse is not integral")
            ints.append(x.numerator)
        out.append(tuple(ints))
    return tuple(out)
