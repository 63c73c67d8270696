"""Canonical matrix constructors: companion, Jordan and realified Jordan blocks.

All blocks follow the lower-triangular convention: ones (or identity
blocks) sit on the subdiagonal.
"""
from __future__ import annotations

from .matrix import Matrix
from .poly import Polynomial
from .scalar import GaussianRational, Q, field_of, to_field


def companion_matrix(f: Polynomial, k: int = 1) -> Matrix:
    """Companion matrix of ``f**k``.

    Ones on the subdiagonal and the negated coefficients of ``f**k`` in the
    last column, constant term in the first row.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if f.degree < 1:
        raise ValueError("companion matrix needs a polynomial of degree >= 1")
    if not f.is_monic():
        raise ValueError(f"companion matrix needs a monic polynomial, got {f}")
    g = f ** k
    d = g.degree
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = -g.coeffs[i]
    return Matrix(rows, f.field)


def jordan_block(a, k: int) -> Matrix:
    if k < 1:
        raise ValueError("k must be positive")
    field = field_of(a)
    a = to_field(a, field)
    return Matrix([[a if i == j else (1 if i == j + 1 else 0) for j in range(k)]
                   for i in range(k)], field)


def realify(z) -> Matrix:
    """2x2 rational matrix ``[[re, im], [-im, re]]`` of a Gaussian rational."""
    if not isinstance(z, GaussianRational):
        z = GaussianRational(z)
    return Matrix([[z.re, z.im], [-z.im, z.re]], Q)


def realified_jordan(z, k: int) -> Matrix:
    """2k x 2k block matrix with ``realify(z)`` on the diagonal and I_2 below it."""
    if k < 1:
        raise ValueError("k must be positive")
    R = realify(z)
    n = 2 * k
    rows = [[0] * n for _ in range(n)]
    for b in range(k):
        for i in range(2):
            for j in range(2):
                rows[2 * b + i][2 * b + j] = R[i, j]
        if b > 0:
            rows[2 * b][2 * b - 2] = 1
            rows[2 * b + 1][2 * b - 1] = 1
    return Matrix(rows, Q)


def _hessenberg(A: Matrix) -> list[list]:
    """Upper Hessenberg matrix similar to ``A`` (elimination with row/column pivoting)."""
    n = A.nrows
    H = A.tolist()
    for m in range(1, n - 1):
        c = m - 1
        i = next((r for r in range(m, n) if H[r][c]), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for row in H:
                row[i], row[m] = row[m], row[i]
        piv = H[m][c]
        for k in range(m + 1, n):
            if H[k][c]:
                f = H[k][c] / piv
                H[k] = [u - f * v for u, v in zip(H[k], H[m])]
                for row in H:
                    row[m] = row[m] + f * row[k]
    return H


def characteristic_polynomial(A: Matrix) -> Polynomial:
    """``det(xI - A)`` through a Hessenberg form and the standard column recurrence."""
    n = A.nrows
    if n != A.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    field = A.field
    H = _hessenberg(A)
    x = Polynomial.x(field)
    p = [Polynomial([1], field)]
    for m in range(n):
        pm = (x - Polynomial([H[m][m]], field)) * p[m]
        prod = to_field(1, field)
        for i in range(m - 1, -1, -1):
            prod = prod * H[i + 1][i]
            if not prod:
                break
            if H[i][m]:
                pm = pm - p[i].scale(H[i][m] * prod)
        p.append(pm)
    return p[n]


def minimal_polynomial(A: Matrix) -> Polynomial:
    """Monic minimal polynomial from the first linear dependency among powers."""
    from .matrix import solve

    n = A.nrows
    field = A.field
    powers = [Matrix.identity(n, field)]
    for d in range(1, n + 1):
        powers.append(powers[-1] @ A)
        cols = [[v for r in P.rows for v in r] for P in powers[:-1]]
        target = [-v for r in powers[-1].rows for v in r]
        sol = solve(Matrix.from_columns(cols, field=field), target)
        if sol is not None:
            return Polynomial(list(sol) + [1], field)
    raise AssertionError("Cayley-Hamilton violated")
