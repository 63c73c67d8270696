"""Shared parameter grids, random generators and independent oracles for the tests."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from nilleibniz import (Classification, DieudonneBlock, Heisenberg, KroneckerBlock,
                        classical_heisenberg, dieudonne_algebra, heisenberg_jordan,
                        heisenberg_leibniz, heisenberg_real_jordan, kronecker_algebra,
                        realified_complex_heisenberg)
from nilleibniz.exactla import GaussianRational, Matrix, Polynomial, companion_matrix

F = Fraction
GI = GaussianRational

GRID_A = (F(0), F(1), F(-1), F(1, 2), F(-1, 2), F(2))
GRID_Z = (GI(1, 1), GI(0, 1), GI(2, -1))
GRID_K = (1, 2, 3)
GRID_N = (1, 2, 3, 4)

# irreducible over Q: x^2 + 1, x^2 - 2, x^2 + x + 1, written as coefficient lists (low first)
IRREDUCIBLE_QUADRATICS = ((1, 0, 1), (-2, 0, 1), (1, 1, 1))


def poly(coeffs, field="Q") -> Polynomial:
    return Polynomial(list(coeffs), field)


# -- expected invariants, written out by hand ---------------------------------

def expected_linear(a) -> Polynomial:
    """Right half-plane representative of ``{x - a, x + a}``."""
    if isinstance(a, GaussianRational):
        rep = a if (a.re, a.im) > (0, 0) else -a
        return Polynomial([-rep, GI(1)], "Qi")
    return Polynomial([-abs(F(a)), F(1)], "Q")


def expected_quadratic(c0, c1) -> Polynomial:
    """Representative of ``{x^2 + c1 x + c0, x^2 - c1 x + c0}``: linear coefficient <= 0."""
    return Polynomial([F(c0), -abs(F(c1)), F(1)], "Q")


def single(block) -> Classification:
    # the generator of the commutator ideal is the one trivial summand
    return Classification((block,), 1)


# -- the family grid ----------------------------------------------------------

def family_instances():
    """``(label, algebra, expected classification or None)`` across the parameter grid.

    ``None`` marks algebras whose commutator ideal is not one-dimensional.
    """
    out = []
    for a, k in itertools.product(GRID_A, GRID_K):
        out.append((f"heisenberg_jordan({a},{k})", heisenberg_jordan(a, k),
                    single(Heisenberg(expected_linear(a), k))))
    for z, k in itertools.product(GRID_Z, GRID_K):
        out.append((f"heisenberg_jordan({z},{k})", heisenberg_jordan(z, k),
                    single(Heisenberg(expected_linear(z), k))))
    for z, k in itertools.product(GRID_Z, GRID_K):
        # divisor x^2 - 2 re(z) x + |z|^2
        f = expected_quadratic(z.re ** 2 + z.im ** 2, 2 * z.re)
        out.append((f"heisenberg_real_jordan({z},{k})", heisenberg_real_jordan(z, k),
                    single(Heisenberg(f, k))))
    for c, k in itertools.product(IRREDUCIBLE_QUADRATICS, GRID_K):
        A = companion_matrix(poly(c), k)
        out.append((f"heisenberg(companion({c})^{k})", heisenberg_leibniz(A),
                    single(Heisenberg(expected_quadratic(c[0], c[1]), k))))
    for n in GRID_N:
        out.append((f"kronecker({n})", kronecker_algebra(n), single(KroneckerBlock(n))))
        out.append((f"dieudonne({n})", dieudonne_algebra(n), single(DieudonneBlock(n))))
        out.append((f"classical_heisenberg({n})", classical_heisenberg(n),
                    Classification((Heisenberg(poly((0, 1)), 1),) * n, 1)))
    for z, n in itertools.product(GRID_Z, (1, 2)):
        out.append((f"realified_complex_heisenberg({z},{n})",
                    realified_complex_heisenberg(z, n), None))
    return out


# -- random matrices ----------------------------------------------------------

def random_rational(rng: random.Random, num: int = 3, den: int = 3) -> Fraction:
    return F(rng.randint(-num, num), rng.randint(1, den))


def random_invertible(rng: random.Random, n: int, num: int = 3, den: int = 3) -> Matrix:
    while True:
        P = Matrix([[random_rational(rng, num, den) for _ in range(n)] for _ in range(n)],
                   "Q", ncols=n)
        if P.rank() == n:
            return P


def random_unimodular(rng: random.Random, n: int, steps: int | None = None) -> Matrix:
    """Product of integer elementary row operations and a row permutation (det +-1)."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice((-2, -1, 1, 2))
        rows[i] = [u + c * v for u, v in zip(rows[i], rows[j])]
    rng.shuffle(rows)
    return Matrix(rows, "Q", ncols=n)


# -- brute-force oracles ------------------------------------------------------

def leibniz_determinant(rows) -> object:
    """Determinant by the Leibniz permutation expansion (tiny matrices only)."""
    n = len(rows)
    total = None
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        term = -term if inversions % 2 else term
        total = term if total is None else total + term
    return total


def bracket_by_hand(L, x, y):
    """``sum_ij x_i y_j c_ij`` straight from the structure tensor."""
    out = [0] * L.dim
    for (i, j), v in L.brackets.items():
        for k, c in enumerate(v):
            out[k] = out[k] + x[i] * y[j] * c
    return tuple(out)
