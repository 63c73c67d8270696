"""Smith normal form of polynomial matrices over Q[x] and Q(i)[x]."""
from __future__ import annotations

from typing import Sequence

from .poly import Polynomial
from .scalar import Q, join_fields


def smith_form_poly(M: Sequence[Sequence[Polynomial]]) -> list[Polynomial]:
    """Monic invariant factors ``d1 | d2 | ...`` of a polynomial matrix.

    Only the nonzero invariant factors are returned, so ``len(result)`` is
    the rank of ``M`` over the field of rational functions.

    Pivot rule: the lowest-degree nonzero entry of the active submatrix,
    ties broken in row-major order. The output does not depend on the rule,
    but the intermediate steps are deterministic.
    """
    A = [list(r) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    field = join_fields(*(p.field for r in A for p in r)) if m and n else Q
    factors: list[Polynomial] = []
    t = 0
    while t < min(m, n):
        piv = _lowest(A, t, range(t, m), range(t, n))
        if piv is None:
            break
        _move(A, t, piv)
        while True:
            if _clear(A, t, m, n):
                # a remainder appeared in row/column t: re-pivot from there
                cand = [(i, t) for i in range(t, m)] + [(t, j) for j in range(t + 1, n)]
                piv = _lowest_of(A, cand)
                _move(A, t, piv)
                continue
            p = A[t][t]
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] and not (A[i][j] % p).is_zero()), None)
            if bad is None:
                break
            i = bad[0]
            A[t] = [a + b for a, b in zip(A[t], A[i])]
        factors.append(A[t][t].monic())
        t += 1
    return [f.to_field(field) for f in factors]


def _lowest(A, t, rows, cols):
    return _lowest_of(A, [(i, j) for i in rows for j in cols])


def _lowest_of(A, cells):
    best = None
    for i, j in cells:
        p = A[i][j]
        if p and (best is None or p.degree < A[best[0]][best[1]].degree):
            best = (i, j)
    return best


def _move(A, t, pos):
    i, j = pos
    if i != t:
        A[t], A[i] = A[i], A[t]
    if j != t:
        for r in A:
            r[t], r[j] = r[j], r[t]


def _clear(A, t, m, n) -> bool:
    """Eliminate column t below and row t right of the pivot.

    Returns True if some remainder is nonzero (the pivot must be replaced).
    """
    p = A[t][t]
    dirty = False
    for i in range(t + 1, m):
        if A[i][t]:
            q, r = divmod(A[i][t], p)
            A[i] = [a - q * b for a, b in zip(A[i], A[t])]
            if r:
                dirty = True
    for j in range(t + 1, n):
        if A[t][j]:
            q, r = divmod(A[t][j], p)
            for row in A:
                row[j] = row[j] - q * row[t]
            if r:
                dirty = True
    return dirty
